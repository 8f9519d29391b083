#pragma once
#include "knotconc/rational.hpp"
#include <initializer_list>
#include <vector>

namespace knotconc {

// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_tridiagonal() const;
    IntMatrix transpose() const;
    IntMatrix mul(const IntMatrix& o) const;
    std::vector<Int> mul(const std::vector<Int>& v) const;

    // exact determinant by fraction-free elimination
    Int det() const;
    // leading principal minors det(m[0..k) x [0..k)), k = 1..n
    std::vector<Int> leading_minors() const;
    // adjugate: adj * m = det(m) * I, exact
    IntMatrix adjugate() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Int> e_;
};

} // namespace knotconc
