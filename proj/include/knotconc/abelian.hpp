#pragma once
#include "knotconc/smith.hpp"
#include <memory>
#include <vector>

namespace knotconc {

class GroupElement;

// Invariant-factor presentation: Z_{f1} + ... + Z_{fk}, each f_i >= 2 and
// f_i | f_{i+1}. The empty list is the trivial group.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;  // trivial
    explicit FiniteAbelianGroup(std::vector<long long> factors);

    const std::vector<long long>& factors() const { return factors_; }
    int num_factors() const { return int(factors_.size()); }
    long long order() const { return order_; }
    long long exponent() const { return factors_.empty() ? 1 : factors_.back(); }
    bool is_trivial() const { return factors_.empty(); }

    GroupElement identity() const;
    GroupElement element(std::vector<long long> coords) const;  // reduced mod factors
    // mixed-radix walk of all elements; identity is index 0
    GroupElement element_at(long long index) const;
    long long index_of(const GroupElement& x) const;

    std::string str() const;  // "Z45", "Z3+Z15", "trivial"
    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator!=(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        return !(a == b);
    }

private:
    std::vector<long long> factors_;
    long long order_ = 1;
};

class GroupElement {
public:
    const FiniteAbelianGroup& group() const { return *group_; }
    const std::vector<long long>& coords() const { return coords_; }

    GroupElement operator+(const GroupElement& o) const;
    GroupElement operator-() const;
    GroupElement times(long long k) const;
    bool is_identity() const;

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return *a.group_ == *b.group_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
    friend bool operator<(const GroupElement& a, const GroupElement& b) {
        return a.coords_ < b.coords_;  // lex, within one group
    }
    std::string str() const;  // "(3,7)"

private:
    friend class FiniteAbelianGroup;
    GroupElement(const FiniteAbelianGroup* g, std::vector<long long> c)
        : group_(g), coords_(std::move(c)) {}
    const FiniteAbelianGroup* group_;
    std::vector<long long> coords_;
};

// least t >= 1 with t*x = 0
long long element_order(const GroupElement& x);

// Cokernel of a nonsingular square integer matrix: the finite group
// Z^n / im(m), with the projection class_of and a section lift.
class Cokernel {
public:
    explicit Cokernel(IntMatrix m);  // SingularMatrix if det = 0

    const FiniteAbelianGroup& group() const { return group_; }
    const SmithDecomposition& smith() const { return snf_; }

    GroupElement class_of(const std::vector<Int>& v) const;
    // a preimage of x under class_of (not reduced, can be large)
    std::vector<Int> lift(const GroupElement& x) const;

private:
    SmithDecomposition snf_;
    FiniteAbelianGroup group_;
    std::vector<int> kept_;  // positions with invariant factor > 1
};

} // namespace knotconc
