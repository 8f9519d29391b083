#pragma once
#include "knotconc/dtable.hpp"
#include <functional>
#include <optional>
#include <string>

namespace knotconc {

// Element of B^copies, stored as base group element indices.
using ProductElement = std::vector<long long>;

struct ProductGroup {
    FiniteAbelianGroup base;
    int copies;

    ProductGroup(FiniteAbelianGroup b, int c);
    Int order() const;
};

struct SubgroupWitness {
    ProductGroup group;
    std::vector<ProductElement> generators;
    FiniteAbelianGroup iso_type;
    std::vector<ProductElement> element_list;  // sorted lexicographically
};

// Close the generators under addition and sort; checks the subgroup order
// against iso_type.
SubgroupWitness materialize(const ProductGroup& pg, std::vector<ProductElement> generators,
                            const FiniteAbelianGroup& iso_type);

// Isomorphism types a vanishing subgroup can have for this determinant:
// det 1 -> trivial, squarefree -> Z_det, p^2 s -> Z_det and Z_p + Z_{det/p}.
// Anything else raises UnsupportedDeterminant.
std::vector<FiniteAbelianGroup> admissible_subgroup_types(const Int& det, int m);

// Deterministic streams, one canonical witness per subgroup; visit returns
// false to stop early.
void enumerate_cyclic_subgroups(const ProductGroup& pg, long long n,
                                const std::function<bool(const SubgroupWitness&)>& visit);
void enumerate_subgroups_of_type(const ProductGroup& pg, const FiniteAbelianGroup& t,
                                 const std::function<bool(const SubgroupWitness&)>& visit);

// true iff every element of the subgroup has coordinatewise d-values summing
// to exactly zero
bool check_vanishing(const SubgroupWitness& w, const DTable& t);

enum class Verdict { Obstructed, Inconclusive, Unsupported };
std::string verdict_name(Verdict v);

struct TypeSearchStats {
    FiniteAbelianGroup type;
    long long subgroups_examined = 0;  // candidates that reached the full vanishing check
    long long passed = 0;
};

struct ObstructOptions {
    int jobs = 1;
    bool collect_all = false;  // keep searching past the first witness
    bool fast_path = true;     // nonzero d at the identity obstructs without search
};

struct ObstructionReport {
    std::string knot;
    int two_m = 0;
    Verdict verdict = Verdict::Unsupported;
    std::optional<SubgroupWitness> witness;      // first (lexicographically) passing subgroup
    std::vector<SubgroupWitness> all_witnesses;  // collect_all runs only
    std::string unsupported_reason;
    std::vector<TypeSearchStats> types_searched;
    long long subgroups_examined = 0;
    bool fast_path_hit = false;
    double elapsed_seconds = 0.0;
};

// Exhaustive search for a subgroup of (table group)^two_m of an admissible
// type on which all two_m-fold d-sums vanish. Obstructed means no such
// subgroup exists, so the knot cannot have order two_m in concordance.
ObstructionReport obstruct_order(const DTable& t, int two_m, const ObstructOptions& opts = {});

} // namespace knotconc
