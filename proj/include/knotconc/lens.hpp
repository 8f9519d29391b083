#pragma once
#include "knotconc/dtable.hpp"

namespace knotconc {

// L(p,q) as listed in a knot table; orientation -1 is the reverse, whose
// correction terms are the negation of orientation +1 (calibrated so that
// +1 reproduces printed lens-knot tables verbatim).
struct LensSpace {
    long long p;
    long long q;
    int orientation = +1;

    LensSpace(long long p_, long long q_, int orientation_ = +1);
};

// d(-L(p,q), i) by the two-parameter recursion
//   d(-L(p,q), i) = (pq - (2i+1-p-q)^2) / (4pq) - d(-L(q,r), j)
// with r = p mod q, j = i mod q, and d(-L(1,.), .) = 0.
Rational d_lens(long long p, long long q, long long i);

namespace detail {
// same recursion with no memo table; kept for cross-checking only
Rational d_lens_nomemo(long long p, long long q, long long i);
}

// The full table over Z_p, canonically relabeled so label 0 is the
// symmetry fixed point.
DTable d_table_lens(const LensSpace& space);

} // namespace knotconc
