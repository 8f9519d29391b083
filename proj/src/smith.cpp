#include "knotconc/smith.hpp"
#include "knotconc/errors.hpp"

namespace knotconc {
namespace {

// floor division (cpp_int '/' truncates toward zero)
Int fdiv(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a && ((a < 0) != (b < 0))) --q;
    return q;
}

struct Worker {
    int n;
    IntMatrix s, l, r, li;

    explicit Worker(const IntMatrix& m)
        : n(m.rows()), s(m), l(IntMatrix::identity(n)),
          r(IntMatrix::identity(n)), li(IntMatrix::identity(n)) {}

    // every row op on s is mirrored on l, and inverted as a column op on li,
    // keeping l * li = I throughout
    void row_swap(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < n; ++c) {
            std::swap(s.at(i, c), s.at(j, c));
            std::swap(l.at(i, c), l.at(j, c));
            std::swap(li.at(c, i), li.at(c, j));
        }
    }
    void row_addmul(int i, int j, const Int& c) {  // row i += c * row j
        if (c.is_zero()) return;
        for (int k = 0; k < n; ++k) {
            s.at(i, k) += c * s.at(j, k);
            l.at(i, k) += c * l.at(j, k);
            li.at(k, j) -= c * li.at(k, i);
        }
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < n; ++k) {
            std::swap(s.at(k, i), s.at(k, j));
            std::swap(r.at(k, i), r.at(k, j));
        }
    }
    // sign fixups go through columns so the left transform stays as close to
    // the identity as the input allows; cokernel labels read straight off it
    void col_neg(int j) {
        for (int k = 0; k < n; ++k) {
            s.at(k, j) = -s.at(k, j);
            r.at(k, j) = -r.at(k, j);
        }
    }
    void col_addmul(int i, int j, const Int& c) {  // col i += c * col j
        if (c.is_zero()) return;
        for (int k = 0; k < n; ++k) {
            s.at(k, i) += c * s.at(k, j);
            r.at(k, i) += c * r.at(k, j);
        }
    }

    bool find_pivot(int k, int& pi, int& pj) const {
        bool found = false;
        Int best;
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j) {
                if (s.at(i, j).is_zero()) continue;
                Int a = boost::multiprecision::abs(s.at(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    // clear row k and column k beyond the pivot; pivot ends up positive
    void process(int k) {
        for (;;) {
            int pi, pj;
            if (!find_pivot(k, pi, pj)) return;  // submatrix all zero
            row_swap(k, pi);
            col_swap(k, pj);
            if (s.at(k, k) < 0) col_neg(k);
            bool dirty = false;
            for (int i = k + 1; i < n; ++i) {
                if (s.at(i, k).is_zero()) continue;
                row_addmul(i, k, -fdiv(s.at(i, k), s.at(k, k)));
                if (!s.at(i, k).is_zero()) dirty = true;
            }
            for (int j = k + 1; j < n; ++j) {
                if (s.at(k, j).is_zero()) continue;
                col_addmul(j, k, -fdiv(s.at(k, j), s.at(k, k)));
                if (!s.at(k, j).is_zero()) dirty = true;
            }
            if (!dirty) return;
            // leftovers are smaller than the pivot; loop shrinks it to the gcd
        }
    }
};

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    if (!m.is_square()) throw Error("smith: matrix must be square");
    Worker w(m);
    for (int k = 0; k < w.n; ++k) w.process(k);

    // zeros last, then enforce the divisibility chain
    for (bool stable = false; !stable;) {
        stable = true;
        for (int k = 0; k + 1 < w.n; ++k) {
            const Int& a = w.s.at(k, k);
            const Int& b = w.s.at(k + 1, k + 1);
            if (a.is_zero() && !b.is_zero()) {
                w.row_swap(k, k + 1);
                w.col_swap(k, k + 1);
                stable = false;
            } else if (!a.is_zero() && b % a != 0) {
                w.row_addmul(k, k + 1, 1);  // drags d_{k+1} into reach of the gcd step
                w.process(k);
                stable = false;
            }
        }
    }

    // the gcd chain step can leave a negative entry behind the pivot
    for (int k = 0; k < w.n; ++k)
        if (w.s.at(k, k) < 0) w.col_neg(k);

    SmithDecomposition out{m, std::move(w.l), std::move(w.r), std::move(w.li), {}};
    out.diagonal.resize(w.n);
    for (int k = 0; k < w.n; ++k) out.diagonal[k] = w.s.at(k, k);
    return out;
}

} // namespace knotconc
