#include "knotconc/goeritz.hpp"
#include "knotconc/errors.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>

namespace knotconc {

namespace {

namespace mp = boost::multiprecision;

Int ceil_of(const Rational& r) { return -((-r).floor()); }

// floor(sqrt(max(r,0))) for r >= 0 given as a Rational
Int isqrt_floor(const Rational& r) {
    Int f = r.floor();
    if (f < 0) return 0;
    return mp::sqrt(f);
}

long long to_ll_checked(const Int& x, const char* what) {
    static const Int cap = Int(1) << 60;
    if (x > cap || x < -cap) throw Error(std::string("goeritz maximization: ") + what + " exceeds the 64-bit working range");
    return x.convert_to<long long>();
}

std::vector<std::vector<long long>> matrix_ll(const IntMatrix& g) {
    int n = g.rows();
    std::vector<std::vector<long long>> out(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[size_t(i)][size_t(j)] = to_ll_checked(g.at(i, j), "form entry");
    return out;
}

// exact solve g x = b for the (nonsingular, symmetric) form matrix
std::vector<Rational> solve_form(const GoeritzForm& f, const std::vector<Rational>& b) {
    const IntMatrix& g = f.matrix();
    int n = g.rows();
    std::vector<Rational> x(n);
    if (n == 0) return x;
    if (f.tridiagonal()) {
        std::vector<Rational> piv(n), rhs(n);
        piv[0] = Rational(g.at(0, 0));
        rhs[0] = b[0];
        for (int i = 1; i < n; ++i) {
            Rational m = Rational(g.at(i, i - 1)) / piv[size_t(i) - 1];
            piv[size_t(i)] = Rational(g.at(i, i)) - m * Rational(g.at(i - 1, i));
            rhs[size_t(i)] = b[size_t(i)] - m * rhs[size_t(i) - 1];
        }
        x[size_t(n) - 1] = rhs[size_t(n) - 1] / piv[size_t(n) - 1];
        for (int i = n - 2; i >= 0; --i)
            x[size_t(i)] = (rhs[size_t(i)] - Rational(g.at(i, i + 1)) * x[size_t(i) + 1]) / piv[size_t(i)];
        return x;
    }
    // dense: x = adj(g) b / det(g), adjugate cached on the form
    const IntMatrix& adj = *f.adjugate();
    Int detg = f.det_abs();
    if (n % 2 != 0) detg = -detg;
    for (int i = 0; i < n; ++i) {
        Rational acc;
        for (int j = 0; j < n; ++j) acc += Rational(adj.at(i, j)) * b[size_t(j)];
        x[size_t(i)] = acc / Rational(detg);
    }
    return x;
}

// (B^{-1})_{ii} for B = -g, exact and positive
Rational inverse_diag(const GoeritzForm& f, int i) {
    if (f.tridiagonal())
        return Rational(f.theta()[size_t(i)] * f.phi()[size_t(i) + 1], f.theta().back());
    Int detg = f.det_abs();
    if (f.rank() % 2 != 0) detg = -detg;
    return Rational(-f.adjugate()->at(i, i), detg);
}

// h(u) = 4 u^T g u + 4 w^T u over a per-axis box |u_i| <= s_i, banded exact DP
long long sweep_tridiagonal(const std::vector<std::vector<long long>>& g,
                            const std::vector<long long>& w,
                            const std::vector<long long>& s) {
    int n = int(w.size());
    auto width = [&](int i) { return 2 * s[size_t(i)] + 1; };
    std::vector<long long> prev(width(0));
    for (long long v = -s[0]; v <= s[0]; ++v)
        prev[size_t(v + s[0])] = 4 * g[0][0] * v * v + 4 * w[0] * v;
    for (int i = 1; i < n; ++i) {
        std::vector<long long> cur(width(i));
        long long c = g[size_t(i) - 1][size_t(i)];
        for (long long v = -s[size_t(i)]; v <= s[size_t(i)]; ++v) {
            long long best = LLONG_MIN;
            for (long long u = -s[size_t(i) - 1]; u <= s[size_t(i) - 1]; ++u)
                best = std::max(best, prev[size_t(u + s[size_t(i) - 1])] + 8 * c * u * v);
            cur[size_t(v + s[size_t(i)])] =
                best + 4 * g[size_t(i)][size_t(i)] * v * v + 4 * w[size_t(i)] * v;
        }
        prev = std::move(cur);
    }
    return *std::max_element(prev.begin(), prev.end());
}

// exact rational LDL^T of B = -g (positive definite)
void ldl_of(const std::vector<std::vector<long long>>& g,
            std::vector<std::vector<Rational>>& L, std::vector<Rational>& D) {
    int n = int(g.size());
    L.assign(size_t(n), std::vector<Rational>(size_t(n)));
    D.assign(size_t(n), Rational());
    for (int k = 0; k < n; ++k) {
        Rational d = Rational(-g[size_t(k)][size_t(k)]);
        for (int m = 0; m < k; ++m)
            d -= D[size_t(m)] * L[size_t(k)][size_t(m)] * L[size_t(k)][size_t(m)];
        D[size_t(k)] = d;
        L[size_t(k)][size_t(k)] = Rational(1);
        for (int j = k + 1; j < n; ++j) {
            Rational v = Rational(-g[size_t(j)][size_t(k)]);
            for (int m = 0; m < k; ++m)
                v -= D[size_t(m)] * L[size_t(j)][size_t(m)] * L[size_t(k)][size_t(m)];
            L[size_t(j)][size_t(k)] = v / d;
        }
    }
}

// enumerate u with (u-z)^T B (u-z) <= radius and track max of h(u), exact
struct DenseSweep {
    const std::vector<std::vector<long long>>& g;
    const std::vector<long long>& w;
    const std::vector<Rational>& z;
    std::vector<std::vector<Rational>> L;
    std::vector<Rational> D;
    std::vector<long long> u;
    long long best = LLONG_MIN;
    long long nodes = 0;

    long long value_at() const {
        int n = int(w.size());
        long long h = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) h += 4 * g[size_t(i)][size_t(j)] * u[size_t(i)] * u[size_t(j)];
            h += 4 * w[size_t(i)] * u[size_t(i)];
        }
        return h;
    }

    void descend(int i, const Rational& rem) {
        if (++nodes > 50'000'000) throw Error("goeritz maximization: dense sweep budget exceeded");
        if (i < 0) {
            best = std::max(best, value_at());
            return;
        }
        Rational c = z[size_t(i)];
        for (int j = i + 1; j < int(w.size()); ++j)
            c -= L[size_t(j)][size_t(i)] * (Rational(u[size_t(j)]) - z[size_t(j)]);
        Rational t = rem / D[size_t(i)];
        Int reach = isqrt_floor(t) + 1;
        Int lo = ceil_of(c - Rational(reach)), hi = (c + Rational(reach)).floor();
        for (Int v = lo; v <= hi; ++v) {
            Rational diff = Rational(v) - c;
            Rational term = D[size_t(i)] * diff * diff;
            if (term > rem) continue;
            u[size_t(i)] = to_ll_checked(v, "sweep coordinate");
            descend(i - 1, rem - term);
        }
    }
};

void check_dp_budget(const std::vector<std::vector<long long>>& g,
                     const std::vector<long long>& w, const std::vector<long long>& s) {
    int n = int(w.size());
    Int bound = 0, cells = 0;
    for (int i = 0; i < n; ++i) {
        Int si = s[size_t(i)];
        bound += 4 * mp::abs(Int(g[size_t(i)][size_t(i)])) * si * si + 4 * mp::abs(Int(w[size_t(i)])) * si;
        if (i + 1 < n) bound += 8 * mp::abs(Int(g[size_t(i)][size_t(i) + 1])) * si * Int(s[size_t(i) + 1]);
        cells += (2 * si + 1) * (i + 1 < n ? 2 * Int(s[size_t(i) + 1]) + 1 : Int(1));
    }
    if (bound > (Int(1) << 61)) throw Error("goeritz maximization: value range exceeds the 64-bit working range");
    if (cells > 200'000'000) throw Error("goeritz maximization: sweep box too large");
}

} // namespace

bool is_negative_definite(const IntMatrix& m) {
    if (!m.is_square() || !m.is_symmetric())
        throw NotSymmetric("negative definiteness is only defined for symmetric matrices");
    auto minors = m.leading_minors();
    for (size_t k = 0; k < minors.size(); ++k) {
        bool want_negative = (k % 2 == 0);
        if (minors[k].is_zero()) return false;
        if ((minors[k] < 0) != want_negative) return false;
    }
    return true;
}

IntMatrix extend_twisted(const IntMatrix& base, long long k) {
    if (!base.is_square() || !base.is_symmetric())
        throw NotSymmetric("twisted extension needs a symmetric base form");
    if (k < 1) throw BadTwistCount("twist count must be at least 1");
    int n = base.rows();
    IntMatrix out(n + 1, n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = base.at(i, j);
    out.at(n, n) = -k;
    if (n > 0) {
        out.at(n, n - 1) = 1;
        out.at(n - 1, n) = 1;
    }
    return out;
}

GoeritzForm::GoeritzForm(IntMatrix g) : g_(std::move(g)) {
    if (!g_.is_square() || !g_.is_symmetric())
        throw NotSymmetric("a Goeritz form must be symmetric");
    if (!is_negative_definite(g_))
        throw NotNegativeDefinite("a Goeritz form must be negative definite");
    tri_ = g_.is_tridiagonal();
    int n = g_.rows();
    if (tri_) {
        // continuants of B = -g: theta grows from the top left, phi from the
        // bottom right; all positive by definiteness
        theta_.assign(size_t(n) + 1, Int(1));
        for (int i = 1; i <= n; ++i) {
            theta_[size_t(i)] = -g_.at(i - 1, i - 1) * theta_[size_t(i) - 1];
            if (i >= 2)
                theta_[size_t(i)] -= g_.at(i - 2, i - 1) * g_.at(i - 2, i - 1) * theta_[size_t(i) - 2];
        }
        phi_.assign(size_t(n) + 1, Int(1));
        for (int i = n - 1; i >= 0; --i) {
            phi_[size_t(i)] = -g_.at(i, i) * phi_[size_t(i) + 1];
            if (i + 2 <= n)
                phi_[size_t(i)] -= g_.at(i, i + 1) * g_.at(i, i + 1) * phi_[size_t(i) + 2];
        }
        det_abs_ = theta_[size_t(n)];
    } else {
        adj_ = g_.adjugate();
        Int d = g_.det();
        det_abs_ = mp::abs(d);
    }
    coker_.emplace(g_);
}

GoeritzForm graph_to_goeritz(const WhiteGraph& g, const std::vector<int>& ordering) {
    if (g.vertex_count < 1) throw Error("white graph: need at least one region");
    if (g.dropped < 0 || g.dropped >= g.vertex_count)
        throw Error("white graph: dropped region out of range");
    for (auto [a, b] : g.edges) {
        if (a < 0 || a >= g.vertex_count || b < 0 || b >= g.vertex_count)
            throw Error("white graph: edge endpoint out of range");
        if (a == b) throw Error("white graph: loops are not allowed");
    }
    // the multigraph must be connected for the form to present the cover
    std::vector<int> dsu(g.vertex_count);
    std::iota(dsu.begin(), dsu.end(), 0);
    std::function<int(int)> find = [&](int x) { return dsu[size_t(x)] == x ? x : dsu[size_t(x)] = find(dsu[size_t(x)]); };
    for (auto [a, b] : g.edges) dsu[size_t(find(a))] = find(b);
    for (int v = 0; v < g.vertex_count; ++v)
        if (find(v) != find(0)) throw Error("white graph: must be connected");

    std::vector<int> order = ordering;
    if (order.empty()) {
        for (int v = 0; v < g.vertex_count; ++v)
            if (v != g.dropped) order.push_back(v);
    } else {
        std::vector<int> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> expect;
        for (int v = 0; v < g.vertex_count; ++v)
            if (v != g.dropped) expect.push_back(v);
        if (sorted != expect)
            throw Error("white graph: ordering must list every kept region exactly once");
    }
    std::vector<int> pos(g.vertex_count, -1);
    for (int i = 0; i < int(order.size()); ++i) pos[size_t(order[size_t(i)])] = i;

    int n = g.vertex_count - 1;
    IntMatrix m(n, n);
    for (auto [a, b] : g.edges) {
        if (a != g.dropped) m.at(pos[size_t(a)], pos[size_t(a)]) -= 1;
        if (b != g.dropped) m.at(pos[size_t(b)], pos[size_t(b)]) -= 1;
        if (a != g.dropped && b != g.dropped) {
            m.at(pos[size_t(a)], pos[size_t(b)]) += 1;
            m.at(pos[size_t(b)], pos[size_t(a)]) += 1;
        }
    }
    return GoeritzForm(std::move(m));
}

std::vector<CharacteristicClass> characteristic_classes(const GoeritzForm& f) {
    if (f.det_abs() % 2 == 0)
        throw Error("characteristic classes: determinant must be odd");
    const Cokernel& ck = f.coker();
    const FiniteAbelianGroup& G = ck.group();
    int n = f.rank();
    std::vector<Int> v0(n);
    for (int i = 0; i < n; ++i) v0[size_t(i)] = f.matrix().at(i, i);
    GroupElement xi0 = ck.class_of(v0);

    std::vector<CharacteristicClass> out;
    out.reserve(size_t(G.order()));
    for (long long idx = 0; idx < G.order(); ++idx) {
        GroupElement xi = G.element_at(idx);
        // rep = v0 + 2 lift((xi - xi0)/2); each factor is odd so 2 inverts
        std::vector<long long> half(G.num_factors());
        for (int t = 0; t < G.num_factors(); ++t) {
            long long fct = G.factors()[size_t(t)];
            Int diff = Int(xi.coords()[size_t(t)]) - Int(xi0.coords()[size_t(t)]);
            Int h = (diff * ((fct + 1) / 2)) % fct;
            if (h < 0) h += fct;
            half[size_t(t)] = h.convert_to<long long>();
        }
        std::vector<Int> rep = ck.lift(G.element(std::move(half)));
        for (int i = 0; i < n; ++i) rep[size_t(i)] = v0[size_t(i)] + 2 * rep[size_t(i)];
        out.push_back(CharacteristicClass{&f, std::move(rep), xi});
    }
    return out;
}

Rational max_square_in_class(const CharacteristicClass& c) {
    const GoeritzForm& f = *c.parent;
    const IntMatrix& gm = f.matrix();
    int n = f.rank();
    if (n == 0) return Rational(0);

    // recenter at the nearest lattice point to the continuous optimum
    std::vector<Rational> w0(n);
    for (int i = 0; i < n; ++i) w0[size_t(i)] = Rational(c.representative[size_t(i)]);
    std::vector<Rational> x = solve_form(f, w0);  // g x = w0
    std::vector<Int> u0(n);
    for (int i = 0; i < n; ++i) u0[size_t(i)] = (-x[size_t(i)] / 2).round();

    std::vector<Int> wbig = gm.mul(u0);
    std::vector<long long> w(n);
    for (int i = 0; i < n; ++i)
        w[size_t(i)] = to_ll_checked(c.representative[size_t(i)] + 2 * wbig[size_t(i)], "recentered vector");

    // y = g^{-1} w; Q0 = w.y; the residual continuous optimizer is z = -y/2,
    // componentwise within [-1/2, 1/2]
    std::vector<Rational> y(n), z(n);
    Rational Q0;
    for (int i = 0; i < n; ++i) {
        y[size_t(i)] = x[size_t(i)] + Rational(Int(2 * u0[size_t(i)]));
        z[size_t(i)] = -y[size_t(i)] / 2;
        Q0 += Rational(w[size_t(i)]) * y[size_t(i)];
    }

    auto gll = matrix_ll(gm);

    // greedy best-improvement descent on h(u) = 4 u^T g u + 4 w^T u from 0;
    // ties go to the lowest index and to +1 before -1
    std::vector<long long> u(n, 0), grad(n, 0);  // grad = g u
    long long h_inc = 0;
    for (;;) {
        long long best_delta = 0;
        int best_i = -1, best_s = 0;
        for (int i = 0; i < n; ++i) {
            for (int sgn : {1, -1}) {
                long long delta =
                    4 * (2 * sgn * grad[size_t(i)] + gll[size_t(i)][size_t(i)]) + 4 * sgn * w[size_t(i)];
                if (delta > best_delta) {
                    best_delta = delta;
                    best_i = i;
                    best_s = sgn;
                }
            }
        }
        if (best_i < 0) break;
        u[size_t(best_i)] += best_s;
        h_inc += best_delta;
        for (int j = 0; j < n; ++j) grad[size_t(j)] += best_s * gll[size_t(j)][size_t(best_i)];
    }

    Rational R = -Q0 - Rational(h_inc);
    if (R < Rational(0)) throw Error("goeritz maximization: incumbent above the continuous bound");

    long long best_h = h_inc;
    if (R > Rational(0)) {
        if (f.tridiagonal()) {
            // anything beating the incumbent satisfies |u_i - z_i|^2 <= R (B^{-1})_ii / 4
            // with |z_i| <= 1/2, so |u_i| <= s_i below
            std::vector<long long> s(n);
            for (int i = 0; i < n; ++i) {
                Rational beta = R * inverse_diag(f, i) / Rational(4);
                s[size_t(i)] = to_ll_checked(mp::sqrt(beta.floor()) + 1, "box radius");
            }
            check_dp_budget(gll, w, s);
            best_h = std::max(best_h, sweep_tridiagonal(gll, w, s));
        } else {
            DenseSweep sweep{gll, w, z, {}, {}, std::vector<long long>(n), best_h, 0};
            ldl_of(gll, sweep.L, sweep.D);
            sweep.descend(n - 1, R / Rational(4));
            best_h = sweep.best;
        }
    }
    return (Q0 + Rational(best_h) + Rational(n)) / Rational(4);
}

DTable d_table_from_goeritz(const GoeritzForm& f, int jobs) {
    auto classes = characteristic_classes(f);
    long long count = f.disc_group().order();
    std::vector<Rational> vals(count);
    detail::parallel_chunks(count, jobs, [&](long long lo, long long hi) {
        for (long long i = lo; i < hi; ++i) vals[size_t(i)] = max_square_in_class(classes[size_t(i)]);
    });
    Rational four_det = Rational(Int(4 * f.det_abs()));
    for (const Rational& v : vals)
        if (!(v * four_det).is_integer())
            throw Error("correction term with denominator not dividing 4|det|");
    return canonical_relabel(DTable(f.disc_group(), std::move(vals)));
}

std::vector<long long> minus_continued_fraction(long long p, long long q) {
    if (p < 1 || q < 0 || q >= p) throw BadIndex("continued fraction needs 0 <= q < p");
    if (std::gcd(p, q) != 1) throw NotCoprime("continued fraction needs coprime p, q");
    std::vector<long long> a;
    while (q > 0) {
        long long ai = (p + q - 1) / q;  // ceil(p/q), >= 2 since q < p
        a.push_back(ai);
        long long np = q, nq = ai * q - p;
        p = np;
        q = nq;
    }
    return a;
}

IntMatrix two_bridge_chain_matrix(long long p, long long q) {
    auto a = minus_continued_fraction(p, q);
    int n = int(a.size());
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = -a[size_t(i)];
        if (i + 1 < n) {
            m.at(i, i + 1) = 1;
            m.at(i + 1, i) = 1;
        }
    }
    return m;
}

} // namespace knotconc
