#include "knotconc/int_matrix.hpp"
#include "knotconc/errors.hpp"
#include <sstream>

namespace knotconc {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(int(rows.size())), cols_(rows.size() ? int(rows.begin()->size()) : 0),
      e_(size_t(rows_) * cols_) {
    size_t k = 0;
    for (const auto& r : rows) {
        if (int(r.size()) != cols_) throw Error("matrix: ragged rows");
        for (long long x : r) e_[k++] = x;
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    int r = int(rows.size());
    int c = r ? int(rows[0].size()) : 0;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c) throw Error("matrix: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool IntMatrix::is_tridiagonal() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((i > j + 1 || j > i + 1) && !at(i, j).is_zero()) return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix: dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

std::vector<Int> IntMatrix::mul(const std::vector<Int>& v) const {
    if (int(v.size()) != cols_) throw Error("matrix: dimension mismatch");
    std::vector<Int> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

// Bareiss fraction-free elimination; exact integer determinant.
Int IntMatrix::det() const {
    if (!is_square()) throw Error("matrix: det of non-square");
    int n = rows_;
    if (n == 0) return 1;
    IntMatrix a(*this);
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k).is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a.at(i, k).is_zero()) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

std::vector<Int> IntMatrix::leading_minors() const {
    if (!is_square()) throw Error("matrix: minors of non-square");
    int n = rows_;
    std::vector<Int> minors(n);
    if (is_tridiagonal() && is_symmetric()) {
        // three-term continuant recurrence, linear time for chain forms
        Int prev2 = 1, prev1 = 1;
        for (int k = 0; k < n; ++k) {
            Int cur = at(k, k) * prev1;
            if (k >= 1) cur -= at(k - 1, k) * at(k - 1, k) * prev2;
            minors[k] = cur;
            prev2 = std::move(prev1);
            prev1 = minors[k];
        }
        return minors;
    }
    // swap-free Bareiss makes pivot k equal the k-th leading minor; fall back
    // to independent determinants from the first zero pivot on
    IntMatrix a(*this);
    Int prev = 1;
    bool clean = true;
    for (int k = 0; k < n && clean; ++k) {
        minors[k] = a.at(k, k);
        if (k == n - 1) break;
        if (a.at(k, k).is_zero()) { clean = false; break; }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    if (!clean) {
        for (int k = 0; k < n; ++k) {
            IntMatrix sub(k + 1, k + 1);
            for (int i = 0; i <= k; ++i)
                for (int j = 0; j <= k; ++j) sub.at(i, j) = at(i, j);
            minors[k] = sub.det();
        }
    }
    return minors;
}

IntMatrix IntMatrix::adjugate() const {
    if (!is_square()) throw Error("matrix: adjugate of non-square");
    int n = rows_;
    Int d = det();
    if (d.is_zero()) throw SingularMatrix("matrix: adjugate of singular matrix");
    // rational Gauss-Jordan inverse, scaled back by det
    using boost::multiprecision::cpp_rational;
    std::vector<std::vector<cpp_rational>> m(n, std::vector<cpp_rational>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = cpp_rational(at(i, j));
        m[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (m[p][c].is_zero()) ++p;
        std::swap(m[c], m[p]);
        cpp_rational pv = m[c][c];
        for (auto& x : m[c]) x /= pv;
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            cpp_rational f = m[r][c];
            for (int j = c; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    IntMatrix adj(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cpp_rational x = m[i][n + j] * d;
            if (boost::multiprecision::denominator(x) != 1)
                throw Error("matrix: adjugate arithmetic bug");
            adj.at(i, j) = boost::multiprecision::numerator(x);
        }
    return adj;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
        os << "]";
    }
    return os.str();
}

} // namespace knotconc
