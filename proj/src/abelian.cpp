#include "knotconc/abelian.hpp"
#include "knotconc/errors.hpp"
#include <numeric>
#include <sstream>

namespace knotconc {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long long> factors)
    : factors_(std::move(factors)) {
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2) throw Error("group: invariant factors must be >= 2");
        if (i && factors_[i] % factors_[i - 1] != 0)
            throw Error("group: invariant factors must form a divisibility chain");
        if (order_ > (1LL << 62) / factors_[i]) throw Error("group: order too large");
        order_ *= factors_[i];
    }
}

GroupElement FiniteAbelianGroup::identity() const {
    return GroupElement(this, std::vector<long long>(factors_.size(), 0));
}

GroupElement FiniteAbelianGroup::element(std::vector<long long> coords) const {
    if (coords.size() != factors_.size()) throw Error("group: wrong coordinate count");
    for (size_t i = 0; i < coords.size(); ++i) {
        coords[i] %= factors_[i];
        if (coords[i] < 0) coords[i] += factors_[i];
    }
    return GroupElement(this, std::move(coords));
}

GroupElement FiniteAbelianGroup::element_at(long long index) const {
    if (index < 0 || index >= order_) throw BadIndex("group: element index out of range");
    std::vector<long long> c(factors_.size());
    for (size_t i = factors_.size(); i-- > 0;) {
        c[i] = index % factors_[i];
        index /= factors_[i];
    }
    return GroupElement(this, std::move(c));
}

long long FiniteAbelianGroup::index_of(const GroupElement& x) const {
    if (x.group() != *this) throw GroupMismatch("group: element of a different group");
    long long idx = 0;
    for (size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + x.coords()[i];
    return idx;
}

std::string FiniteAbelianGroup::str() const {
    if (factors_.empty()) return "trivial";
    std::ostringstream os;
    for (size_t i = 0; i < factors_.size(); ++i) os << (i ? "+Z" : "Z") << factors_[i];
    return os.str();
}

GroupElement GroupElement::operator+(const GroupElement& o) const {
    if (*group_ != *o.group_) throw GroupMismatch("group: addition across groups");
    std::vector<long long> c(coords_.size());
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = (coords_[i] + o.coords_[i]) % group_->factors()[i];
    return GroupElement(group_, std::move(c));
}

GroupElement GroupElement::operator-() const {
    std::vector<long long> c(coords_.size());
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = coords_[i] ? group_->factors()[i] - coords_[i] : 0;
    return GroupElement(group_, std::move(c));
}

GroupElement GroupElement::times(long long k) const {
    std::vector<long long> c(coords_.size());
    for (size_t i = 0; i < c.size(); ++i) {
        long long f = group_->factors()[i];
        c[i] = ((coords_[i] % f) * (k % f)) % f;
        if (c[i] < 0) c[i] += f;
    }
    return GroupElement(group_, std::move(c));
}

bool GroupElement::is_identity() const {
    for (long long c : coords_)
        if (c) return false;
    return true;
}

std::string GroupElement::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
    os << ")";
    return os.str();
}

long long element_order(const GroupElement& x) {
    long long t = 1;
    for (size_t i = 0; i < x.coords().size(); ++i) {
        long long f = x.group().factors()[i];
        long long o = f / std::gcd(f, x.coords()[i]);
        t = std::lcm(t, o);
    }
    return t;
}

Cokernel::Cokernel(IntMatrix m) : snf_(smith_normal_form(m)) {
    std::vector<long long> factors;
    for (size_t i = 0; i < snf_.diagonal.size(); ++i) {
        const Int& d = snf_.diagonal[i];
        if (d.is_zero()) throw SingularMatrix("cokernel: matrix is singular");
        if (d == 1) continue;
        if (d > Int(1LL << 62)) throw Error("cokernel: group too large");
        kept_.push_back(int(i));
        factors.push_back(d.convert_to<long long>());
    }
    group_ = FiniteAbelianGroup(std::move(factors));
}

GroupElement Cokernel::class_of(const std::vector<Int>& v) const {
    std::vector<Int> y = snf_.left.mul(v);
    std::vector<long long> c(kept_.size());
    for (size_t i = 0; i < kept_.size(); ++i) {
        long long d = group_.factors()[i];
        Int r = y[kept_[i]] % d;
        if (r < 0) r += d;
        c[i] = r.convert_to<long long>();
    }
    return group_.element(std::move(c));
}

std::vector<Int> Cokernel::lift(const GroupElement& x) const {
    if (x.group() != group_) throw GroupMismatch("cokernel: element of a different group");
    int n = snf_.source.rows();
    std::vector<Int> y(n);
    for (size_t i = 0; i < kept_.size(); ++i) y[kept_[i]] = x.coords()[i];
    return snf_.left_inv.mul(y);
}

} // namespace knotconc
