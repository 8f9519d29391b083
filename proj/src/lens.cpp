#include "knotconc/lens.hpp"
#include "knotconc/errors.hpp"
#include <map>
#include <numeric>

namespace knotconc {
namespace {

using Memo = std::map<std::tuple<long long, long long, long long>, Rational>;

void check_args(long long p, long long q, long long i) {
    if (p < 1 || q < 0) throw Error("d_lens: need p >= 1 and q >= 0");
    if (std::gcd(p, q) != 1) throw NotCoprime("d_lens: gcd(p,q) must be 1");
    if (i < 0 || i >= p + q) throw BadIndex("d_lens: index outside [0, p+q)");
}

Rational recursion_term(long long p, long long q, long long i) {
    Int t = 2 * i + 1 - p - q;
    return Rational(Int(p) * q - t * t, 4 * Int(p) * q);
}

// identical (p,q,i) subproblems repeat heavily within one table
Rational d_lens_memo(long long p, long long q, long long i, Memo& memo) {
    if (p == 1) return Rational(0);
    auto key = std::make_tuple(p, q, i);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Rational v = recursion_term(p, q, i) - d_lens_memo(q, p % q, i % q, memo);
    memo.emplace(key, v);
    return v;
}

} // namespace

Rational d_lens(long long p, long long q, long long i) {
    check_args(p, q, i);
    Memo memo;
    return d_lens_memo(p, q, i, memo);
}

namespace detail {
Rational d_lens_nomemo(long long p, long long q, long long i) {
    check_args(p, q, i);
    if (p == 1) return Rational(0);
    return recursion_term(p, q, i) - d_lens_nomemo(q, p % q, i % q);
}
} // namespace detail

LensSpace::LensSpace(long long p_, long long q_, int orientation_)
    : p(p_), q(q_), orientation(orientation_) {
    if (p < 1) throw Error("lens space: p must be >= 1");
    if (p == 1 ? q != 0 : (q < 1 || q >= p))
        throw Error("lens space: need 1 <= q < p (or q = 0 when p = 1)");
    if (std::gcd(p, q) != 1) throw NotCoprime("lens space: gcd(p,q) must be 1");
    if (orientation != 1 && orientation != -1) throw Error("lens space: orientation is +1 or -1");
}

DTable d_table_lens(const LensSpace& space) {
    long long p = space.p;
    std::vector<Rational> vals(p);
    Memo memo;
    for (long long i = 0; i < p; ++i) {
        Rational v = d_lens_memo(space.p, space.q, i, memo);
        vals[size_t(i)] = space.orientation > 0 ? v : -v;
    }
    FiniteAbelianGroup group =
        p == 1 ? FiniteAbelianGroup() : FiniteAbelianGroup({p});
    return canonical_relabel(DTable(std::move(group), std::move(vals)));
}

} // namespace knotconc
