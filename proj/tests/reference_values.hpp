#pragma once
#include "knotconc/int_matrix.hpp"
#include "knotconc/rational.hpp"
#include <map>
#include <vector>

// Published correction-term tables and Goeritz matrices for the fixture
// knots, in the order they appear in print. Everything downstream compares
// against these exactly.

namespace refval {

inline std::vector<knotconc::Rational> over(long long den, std::vector<long long> nums) {
    std::vector<knotconc::Rational> out;
    out.reserve(nums.size());
    for (long long n : nums)
        out.emplace_back(knotconc::Int(n), knotconc::Int(den));
    return out;
}

// double branched cover L(29,11), 29 values
inline std::vector<knotconc::Rational> table_8_13() {
    return over(29, {-2,  -18, 8,   18,  12,  -10, 10,  14,  2,   -26,
                     -12, -14, -32, -8,  0,   -8,  -32, -14, -12, -26,
                     2,   14,  10,  -10, 12,  18,  8,   -18, -2});
}

// from the 4x4 Goeritz matrix below, 37 values
inline std::vector<knotconc::Rational> table_8_17() {
    return over(37, {-20, -32, 18, -18, 8,  22,  24,  14,  -8, 32,  -14, 2,  6,
                     -2,  -22, 20, -24, -6, 0,   -6,  -24, 20, -22, -2,  6,  2,
                     -14, 32,  -8, 14,  24, 22,  8,   -18, 18, -32, -20});
}

// from the twisted extension (k = 3) of the 3x3 matrix below, 45 values
inline std::vector<knotconc::Rational> table_10_158() {
    return over(45, {-2,  -18, 40,  -8,  18, 28,  22,  0,  -38, -2,  18, 22,  10,  -18, 28,
                     -32, -18, -20, -38, 18, -32, -8,  0,  -8,  -32, 18, -38, -20, -18, -32,
                     28,  -18, 10,  22,  18, -2,  -38, 0,  22,  28,  18, -8,  40,  -18, -2});
}

inline knotconc::IntMatrix goeritz_8_17() {
    return knotconc::IntMatrix{{-3, 1, 0, 1}, {1, -3, 1, 1}, {0, 1, -2, 0}, {1, 1, 0, -4}};
}

inline knotconc::IntMatrix goeritz_10_158_tilde() {
    return knotconc::IntMatrix{{-4, 1, 2}, {1, -4, 2}, {2, 2, -4}};
}

inline knotconc::IntMatrix goeritz_10_158() {
    return knotconc::IntMatrix{
        {-4, 1, 2, 0}, {1, -4, 2, 0}, {2, 2, -4, 1}, {0, 0, 1, -3}};
}

inline std::map<knotconc::Rational, int> counted(const std::vector<knotconc::Rational>& v) {
    std::map<knotconc::Rational, int> m;
    for (const auto& x : v) ++m[x];
    return m;
}

} // namespace refval
