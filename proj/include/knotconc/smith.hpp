#pragma once
#include "knotconc/int_matrix.hpp"

namespace knotconc {

// left * source * right = diag(diagonal), with left, right unimodular.
// left_inv is maintained alongside left so cokernel representatives can be
// lifted back without inverting anything after the fact.
struct SmithDecomposition {
    IntMatrix source;
    IntMatrix left, right, left_inv;
    std::vector<Int> diagonal;  // non-negative, each divides the next
};

// Deterministic: smallest-absolute-value pivot, ties by lowest (row, col).
SmithDecomposition smith_normal_form(const IntMatrix& m);

} // namespace knotconc
