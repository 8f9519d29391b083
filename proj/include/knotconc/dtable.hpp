#pragma once
#include "knotconc/abelian.hpp"
#include "knotconc/rational.hpp"

namespace knotconc {

// A full assignment of correction terms: one exact rational per group element.
// After canonical_relabel the identity sits at the symmetry fixed point, so
// value(-x) = value(x) and origin_is_spin() reports true.
class DTable {
public:
    DTable(FiniteAbelianGroup group, std::vector<Rational> values_by_index,
           bool origin_is_spin = false);

    const FiniteAbelianGroup& group() const { return group_; }
    bool origin_is_spin() const { return origin_is_spin_; }

    const Rational& value(const GroupElement& x) const { return values_[group_.index_of(x)]; }
    const Rational& value_at(long long index) const { return values_.at(size_t(index)); }
    const std::vector<Rational>& values() const { return values_; }

    DTable negated() const;

private:
    FiniteAbelianGroup group_;
    std::vector<Rational> values_;  // indexed per FiniteAbelianGroup::element_at
    bool origin_is_spin_;
};

// Translate labels so the (unique up to the table's symmetries) shift c with
// value(x) = value(2c - x) becomes the new identity; lex-smallest such c when
// several work. Requires odd group order so halving is well defined.
DTable canonical_relabel(const DTable& t);

} // namespace knotconc
