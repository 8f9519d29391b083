#include "knotconc/dtable.hpp"
#include "knotconc/errors.hpp"

namespace knotconc {

DTable::DTable(FiniteAbelianGroup group, std::vector<Rational> values_by_index,
               bool origin_is_spin)
    : group_(std::move(group)), values_(std::move(values_by_index)),
      origin_is_spin_(origin_is_spin) {
    if (static_cast<long long>(values_.size()) != group_.order())
        throw Error("dtable: one value per group element required");
}

DTable DTable::negated() const {
    std::vector<Rational> v(values_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = -values_[i];
    return DTable(group_, std::move(v), origin_is_spin_);
}

DTable canonical_relabel(const DTable& t) {
    const auto& g = t.group();
    long long n = g.order();
    if (n % 2 == 0) throw Error("canonical_relabel: group order must be odd");

    for (long long ci = 0; ci < n; ++ci) {
        GroupElement c = g.element_at(ci);
        // cheap gate first: x = c demands nothing, x = 0 demands v(0) = v(2c)
        if (t.value_at(g.index_of(c + c)) != t.value_at(0)) continue;
        GroupElement twoc = c + c;
        bool ok = true;
        for (long long xi = 0; xi < n && ok; ++xi) {
            GroupElement x = g.element_at(xi);
            ok = t.value_at(xi) == t.value(twoc + (-x));
        }
        if (!ok) continue;
        std::vector<Rational> relabeled(n);
        for (long long ji = 0; ji < n; ++ji)
            relabeled[size_t(ji)] = t.value(c + g.element_at(ji));
        return DTable(g, std::move(relabeled), true);
    }
    throw NoSymmetricLabeling("canonical_relabel: no shift symmetrizes this table");
}

} // namespace knotconc
