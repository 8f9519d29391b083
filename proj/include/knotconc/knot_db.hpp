#pragma once
#include "knotconc/goeritz.hpp"
#include "knotconc/lens.hpp"
#include <variant>

namespace knotconc {

struct LensPresentation {
    long long p, q;
    int orientation = +1;
};
struct GoeritzPresentation {
    IntMatrix matrix;
};
struct TwistedGoeritzPresentation {
    IntMatrix matrix;
    long long k;
};
struct WhiteGraphPresentation {
    WhiteGraph graph;
    std::vector<int> ordering;  // empty = ascending
};
struct Unavailable {};

using Presentation = std::variant<Unavailable, LensPresentation, GoeritzPresentation,
                                  TwistedGoeritzPresentation, WhiteGraphPresentation>;

struct KnotRecord {
    std::string name;
    Int determinant;
    Presentation presentation;

    bool has_presentation() const {
        return !std::holds_alternative<Unavailable>(presentation);
    }
};

// JSON database, schema documented in the README; records are validated
// (odd positive determinant, matrix determinant matches the declared one,
// negative definiteness) and returned in file order.
std::vector<KnotRecord> load_knot_db(const std::string& path);

// Dispatch a presentation to the matching d-invariant route; the result is
// canonically labeled and its group order equals the declared determinant.
DTable resolve_dtable(const KnotRecord& r, int jobs = 1);

// KNOTCONC_DB if set, else ./data/knots.json, else the copy shipped next to
// the executable (or one directory above it).
std::string default_db_path(const std::string& exe_dir_hint = "");

// FNV-1a 64 over the raw file bytes, as "fnv1a64:<16 hex digits>"
std::string file_checksum(const std::string& path);

} // namespace knotconc
