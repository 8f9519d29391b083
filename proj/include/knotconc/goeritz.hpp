#pragma once
#include "knotconc/dtable.hpp"
#include <optional>
#include <utility>

namespace knotconc {

// Checkerboard white-region graph with one region marked for deletion.
// Vertices are 0..vertex_count-1; edges form a multiset, loops forbidden.
struct WhiteGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    int dropped = 0;
};

// true iff the leading principal minors alternate in sign starting negative;
// exact integer computation throughout
bool is_negative_definite(const IntMatrix& m);

// Border base with a zero row/column except a 1 next to the corner and -k in
// the corner; k counts the negative half-twists of the extra region.
IntMatrix extend_twisted(const IntMatrix& base, long long k);

// Symmetric negative definite form together with its discriminant group.
class GoeritzForm {
public:
    explicit GoeritzForm(IntMatrix g);

    const IntMatrix& matrix() const { return g_; }
    int rank() const { return g_.rows(); }
    const FiniteAbelianGroup& disc_group() const { return coker_->group(); }
    const Cokernel& coker() const { return *coker_; }
    const Int& det_abs() const { return det_abs_; }

    // internals for the class maximization
    bool tridiagonal() const { return tri_; }
    const IntMatrix* adjugate() const { return adj_ ? &*adj_ : nullptr; }
    // leading/trailing continuants of -g (tridiagonal forms only)
    const std::vector<Int>& theta() const { return theta_; }
    const std::vector<Int>& phi() const { return phi_; }

private:
    IntMatrix g_;
    std::optional<Cokernel> coker_;
    Int det_abs_;
    bool tri_ = false;
    std::optional<IntMatrix> adj_;
    std::vector<Int> theta_, phi_;
};

// off-diagonals are edge multiplicities between kept regions, diagonals the
// negated valences; ordering (default: ascending vertex id) fixes the basis
GoeritzForm graph_to_goeritz(const WhiteGraph& g, const std::vector<int>& ordering = {});

struct CharacteristicClass {
    const GoeritzForm* parent;
    std::vector<Int> representative;  // a characteristic vector in the class
    GroupElement label;               // its image in the discriminant group
};

// One class per discriminant group element, in element index order.
// Requires odd determinant (true for knot forms): halving must be invertible.
std::vector<CharacteristicClass> characteristic_classes(const GoeritzForm& f);

// (max of the dual form over the class + rank) / 4, certified exact: greedy
// descent for an incumbent, then exhaustive sweep of the ellipsoid-bounded
// box that could still beat it.
Rational max_square_in_class(const CharacteristicClass& c);

DTable d_table_from_goeritz(const GoeritzForm& f, int jobs = 1);

// p/q = a1 - 1/(a2 - 1/(... - 1/ak)), all ai >= 2; unique for p > q >= 1
std::vector<long long> minus_continued_fraction(long long p, long long q);

// tridiagonal chain form realizing the 2-bridge double branched cover L(p,q)
IntMatrix two_bridge_chain_matrix(long long p, long long q);

} // namespace knotconc
