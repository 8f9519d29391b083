#include "knotconc/knot_db.hpp"
#include "knotconc/errors.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace knotconc {

namespace {

using nlohmann::json;

IntMatrix matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw ParseError(where + ": matrix must be a non-empty array of rows");
    std::vector<std::vector<long long>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw ParseError(where + ": matrix rows must be arrays");
        std::vector<long long> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw ParseError(where + ": matrix entries must be integers");
            r.push_back(x.get<long long>());
        }
        rows.push_back(std::move(r));
    }
    for (const auto& r : rows)
        if (r.size() != rows[0].size()) throw ParseError(where + ": ragged matrix");
    return IntMatrix::from_rows(rows);
}

Presentation presentation_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw ParseError(where + ": presentation needs a string \"type\"");
    std::string type = j["type"].get<std::string>();
    if (type == "unavailable") return Unavailable{};
    if (type == "lens") {
        if (!j.contains("p") || !j.contains("q"))
            throw ParseError(where + ": lens presentation needs p and q");
        LensPresentation lp{j["p"].get<long long>(), j["q"].get<long long>(),
                            j.value("orientation", 1)};
        return lp;
    }
    if (type == "goeritz")
        return GoeritzPresentation{matrix_from_json(j.at("matrix"), where)};
    if (type == "twisted_goeritz") {
        if (!j.contains("k")) throw ParseError(where + ": twisted_goeritz needs k");
        return TwistedGoeritzPresentation{matrix_from_json(j.at("matrix"), where),
                                          j["k"].get<long long>()};
    }
    if (type == "white_graph") {
        WhiteGraphPresentation wp;
        wp.graph.vertex_count = j.at("vertices").get<int>();
        wp.graph.dropped = j.value("dropped", 0);
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError(where + ": edges must be [a, b] pairs");
            wp.graph.edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
        if (j.contains("ordering"))
            for (const auto& v : j["ordering"]) wp.ordering.push_back(v.get<int>());
        return wp;
    }
    throw ParseError(where + ": unknown presentation type \"" + type + "\"");
}

void validate_record(const KnotRecord& r) {
    const std::string& name = r.name;
    if (r.determinant < 1 || r.determinant % 2 == 0)
        throw ValidationError(name + ": determinant must be odd and positive");
    if (!r.has_presentation()) return;
    try {
        Int resolved;
        if (const auto* lp = std::get_if<LensPresentation>(&r.presentation)) {
            LensSpace check(lp->p, lp->q, lp->orientation);  // validates coprimality
            (void)check;
            resolved = lp->p;
        } else if (const auto* gp = std::get_if<GoeritzPresentation>(&r.presentation)) {
            resolved = GoeritzForm(gp->matrix).det_abs();
        } else if (const auto* tp = std::get_if<TwistedGoeritzPresentation>(&r.presentation)) {
            resolved = GoeritzForm(extend_twisted(tp->matrix, tp->k)).det_abs();
        } else if (const auto* wp = std::get_if<WhiteGraphPresentation>(&r.presentation)) {
            resolved = graph_to_goeritz(wp->graph, wp->ordering).det_abs();
        }
        if (resolved != r.determinant) {
            std::ostringstream os;
            os << name << ": presentation has determinant " << resolved.str()
               << " but the record declares " << r.determinant.str();
            throw ValidationError(os.str());
        }
    } catch (const ValidationError&) {
        throw;
    } catch (const Error& e) {
        throw ValidationError(name + ": " + e.what());
    }
}

} // namespace

std::vector<KnotRecord> load_knot_db(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open knot database: " + path);
    json root;
    try {
        root = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!root.is_object() || !root.contains("knots") || !root["knots"].is_array())
        throw ParseError(path + ": expected an object with a \"knots\" array");
    std::vector<KnotRecord> out;
    std::set<std::string> seen;
    for (const auto& jk : root["knots"]) {
        if (!jk.contains("name") || !jk["name"].is_string())
            throw ParseError(path + ": knot record without a name");
        std::string name = jk["name"].get<std::string>();
        if (!seen.insert(name).second)
            throw ValidationError(path + ": duplicate knot \"" + name + "\"");
        if (!jk.contains("determinant") || !jk["determinant"].is_number_integer())
            throw ParseError(name + ": integer determinant required");
        KnotRecord r{name, Int(jk["determinant"].get<long long>()),
                     jk.contains("presentation")
                         ? presentation_from_json(jk["presentation"], name)
                         : Presentation(Unavailable{})};
        validate_record(r);
        out.push_back(std::move(r));
    }
    return out;
}

DTable resolve_dtable(const KnotRecord& r, int jobs) {
    DTable t = std::visit(
        [&](const auto& p) -> DTable {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Unavailable>) {
                throw PresentationUnavailable(r.name + ": no presentation in the database");
            } else if constexpr (std::is_same_v<T, LensPresentation>) {
                return d_table_lens(LensSpace(p.p, p.q, p.orientation));
            } else if constexpr (std::is_same_v<T, GoeritzPresentation>) {
                return d_table_from_goeritz(GoeritzForm(p.matrix), jobs);
            } else if constexpr (std::is_same_v<T, TwistedGoeritzPresentation>) {
                return d_table_from_goeritz(GoeritzForm(extend_twisted(p.matrix, p.k)), jobs);
            } else {
                return d_table_from_goeritz(graph_to_goeritz(p.graph, p.ordering), jobs);
            }
        },
        r.presentation);
    if (Int(t.group().order()) != r.determinant)
        throw ValidationError(r.name + ": resolved group order does not match the determinant");
    return t;
}

std::string default_db_path(const std::string& exe_dir_hint) {
    namespace fs = std::filesystem;
    if (const char* env = std::getenv("KNOTCONC_DB")) return env;
    const std::string rel = "data/knots.json";
    std::error_code ec;
    if (fs::exists(rel, ec)) return rel;
    if (!exe_dir_hint.empty()) {
        fs::path base(exe_dir_hint);
        for (fs::path cand : {base / rel, base.parent_path() / rel})
            if (fs::exists(cand, ec)) return cand.string();
    }
    return rel;
}

std::string file_checksum(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file for checksum: " + path);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

} // namespace knotconc
