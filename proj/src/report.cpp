#include "knotconc/report.hpp"
#include "knotconc/errors.hpp"
#include "knotconc/version.hpp"
#include "parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <sstream>

namespace knotconc {

namespace {

using ojson = nlohmann::ordered_json;
using nlohmann::json;

ojson coords_json(const FiniteAbelianGroup& g, long long index) {
    ojson a = ojson::array();
    GroupElement e = g.element_at(index);  // keep the element alive past coords()
    for (long long c : e.coords()) a.push_back(c);
    return a;
}

ojson witness_json(const SubgroupWitness& w) {
    ojson jw;
    jw["iso_type"] = w.iso_type.str();
    jw["iso_factors"] = w.iso_type.factors();
    ojson gens = ojson::array();
    for (const ProductElement& g : w.generators) {
        ojson tup = ojson::array();
        for (long long idx : g) tup.push_back(coords_json(w.group.base, idx));
        gens.push_back(std::move(tup));
    }
    jw["generators"] = std::move(gens);
    return jw;
}

SubgroupWitness witness_from_json(const json& jw, const FiniteAbelianGroup& base, int copies) {
    FiniteAbelianGroup iso;
    std::vector<long long> fac = jw.at("iso_factors").get<std::vector<long long>>();
    if (!fac.empty()) iso = FiniteAbelianGroup(fac);
    std::vector<ProductElement> gens;
    for (const auto& jt : jw.at("generators")) {
        ProductElement g;
        for (const auto& je : jt) {
            std::vector<long long> coords = je.get<std::vector<long long>>();
            g.push_back(base.index_of(base.element(std::move(coords))));
        }
        gens.push_back(std::move(g));
    }
    return materialize(ProductGroup(base, copies), std::move(gens), iso);
}

// compact, comma-free rendering used by csv and text: (a b c d) per tuple,
// multi-coordinate base elements joined by ':'
std::string element_compact(const FiniteAbelianGroup& g, long long index) {
    std::ostringstream os;
    GroupElement e = g.element_at(index);
    const auto& c = e.coords();
    for (size_t i = 0; i < c.size(); ++i) os << (i ? ":" : "") << c[i];
    if (c.empty()) os << "0";
    return os.str();
}

std::string witness_compact(const SubgroupWitness& w) {
    std::ostringstream os;
    os << w.iso_type.str() << ":";
    for (size_t gi = 0; gi < w.generators.size(); ++gi) {
        if (gi) os << "|";
        os << "(";
        for (size_t i = 0; i < w.generators[gi].size(); ++i)
            os << (i ? " " : "") << element_compact(w.group.base, w.generators[gi][i]);
        os << ")";
    }
    return os.str();
}

ojson item_json(const BatchItem& it, int two_m, bool no_timing) {
    ojson j;
    j["knot"] = it.knot;
    j["status"] = it.ok ? "ok" : "error";
    j["determinant"] = it.determinant.str();
    if (!it.ok) {
        j["error"] = it.error;
        return j;
    }
    j["group"] = it.group.str();
    j["group_factors"] = it.group.factors();
    j["verdict"] = verdict_name(it.report.verdict);
    if (it.report.verdict == Verdict::Unsupported)
        j["unsupported_reason"] = it.report.unsupported_reason;
    j["fast_path"] = it.report.fast_path_hit;
    j["subgroups_examined"] = it.report.subgroups_examined;
    ojson types = ojson::array();
    for (const TypeSearchStats& st : it.report.types_searched) {
        ojson jt;
        jt["type"] = st.type.str();
        jt["type_factors"] = st.type.factors();
        jt["subgroups_examined"] = st.subgroups_examined;
        jt["passed"] = st.passed;
        types.push_back(std::move(jt));
    }
    j["types_searched"] = std::move(types);
    j["witness"] = it.report.witness ? witness_json(*it.report.witness) : ojson(nullptr);
    if (!no_timing) j["elapsed_seconds"] = it.report.elapsed_seconds;
    (void)two_m;
    return j;
}

} // namespace

BatchReport batch_report(const std::vector<KnotRecord>& records, int two_m,
                         const BatchOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    BatchReport rep;
    rep.tool = kToolName;
    rep.version = kToolVersion;
    rep.two_m = two_m;
    std::vector<const KnotRecord*> sorted;
    for (const KnotRecord& r : records) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(),
              [](const KnotRecord* a, const KnotRecord* b) { return a->name < b->name; });
    rep.items.resize(sorted.size());

    long long count = static_cast<long long>(sorted.size());
    int outer = count > 1 ? opts.jobs : 1;
    int inner = count > 1 ? 1 : opts.jobs;
    detail::parallel_chunks(count, outer, [&](long long lo, long long hi) {
        for (long long i = lo; i < hi; ++i) {
            const KnotRecord& r = *sorted[size_t(i)];
            BatchItem& it = rep.items[size_t(i)];
            it.knot = r.name;
            it.determinant = r.determinant;
            try {
                DTable t = resolve_dtable(r, inner);
                ObstructOptions oo;
                oo.jobs = inner;
                oo.collect_all = opts.collect_all;
                oo.fast_path = opts.fast_path;
                it.report = obstruct_order(t, two_m, oo);
                it.report.knot = r.name;
                it.group = t.group();
                it.ok = true;
            } catch (const Error& e) {
                it.ok = false;
                it.error = e.what();
            }
        }
    });
    rep.total_elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::string report_to_json(const BatchReport& r, bool no_timing) {
    ojson j;
    j["tool"] = r.tool;
    j["version"] = r.version;
    j["db_checksum"] = r.db_checksum;
    j["order"] = r.two_m;
    ojson knots = ojson::array();
    for (const BatchItem& it : r.items) knots.push_back(item_json(it, r.two_m, no_timing));
    j["knots"] = std::move(knots);
    if (!no_timing) j["total_elapsed_seconds"] = r.total_elapsed_seconds;
    return j.dump(2) + "\n";
}

BatchReport report_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
    BatchReport r;
    try {
        r.tool = j.at("tool").get<std::string>();
        r.version = j.at("version").get<std::string>();
        r.db_checksum = j.value("db_checksum", "");
        r.two_m = j.at("order").get<int>();
        r.total_elapsed_seconds = j.value("total_elapsed_seconds", 0.0);
        for (const auto& jk : j.at("knots")) {
            BatchItem it;
            it.knot = jk.at("knot").get<std::string>();
            it.determinant = Int(jk.at("determinant").get<std::string>());
            it.ok = jk.at("status").get<std::string>() == "ok";
            if (!it.ok) {
                it.error = jk.value("error", "");
                r.items.push_back(std::move(it));
                continue;
            }
            std::vector<long long> gf = jk.at("group_factors").get<std::vector<long long>>();
            if (!gf.empty()) it.group = FiniteAbelianGroup(gf);
            it.report.knot = it.knot;
            it.report.two_m = r.two_m;
            std::string v = jk.at("verdict").get<std::string>();
            it.report.verdict = v == "Obstructed"     ? Verdict::Obstructed
                                : v == "Inconclusive" ? Verdict::Inconclusive
                                                      : Verdict::Unsupported;
            it.report.unsupported_reason = jk.value("unsupported_reason", "");
            it.report.fast_path_hit = jk.value("fast_path", false);
            it.report.subgroups_examined = jk.value("subgroups_examined", 0LL);
            if (jk.contains("types_searched"))
                for (const auto& jt : jk["types_searched"]) {
                    TypeSearchStats st;
                    std::vector<long long> tf =
                        jt.at("type_factors").get<std::vector<long long>>();
                    if (!tf.empty()) st.type = FiniteAbelianGroup(tf);
                    st.subgroups_examined = jt.at("subgroups_examined").get<long long>();
                    st.passed = jt.at("passed").get<long long>();
                    it.report.types_searched.push_back(std::move(st));
                }
            if (jk.contains("witness") && !jk["witness"].is_null())
                it.report.witness = witness_from_json(jk["witness"], it.group, r.two_m);
            it.report.elapsed_seconds = jk.value("elapsed_seconds", 0.0);
            r.items.push_back(std::move(it));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
    return r;
}

std::string report_to_csv(const BatchReport& r, bool no_timing) {
    std::ostringstream os;
    os << "knot,status,determinant,group,verdict,fast_path,subgroups_examined,witness,error";
    if (!no_timing) os << ",elapsed_seconds";
    os << "\n";
    for (const BatchItem& it : r.items) {
        os << it.knot << "," << (it.ok ? "ok" : "error") << "," << it.determinant.str() << ",";
        if (it.ok) {
            os << it.group.str() << "," << verdict_name(it.report.verdict) << ","
               << (it.report.fast_path_hit ? "1" : "0") << "," << it.report.subgroups_examined
               << "," << (it.report.witness ? witness_compact(*it.report.witness) : "") << ",";
        } else {
            os << ",,,,," << "\"" << it.error << "\"";
        }
        if (!no_timing) os << "," << (it.ok ? std::to_string(it.report.elapsed_seconds) : "");
        os << "\n";
    }
    return os.str();
}

std::string report_to_text(const BatchReport& r, bool no_timing) {
    std::ostringstream os;
    os << r.tool << " " << r.version << ", order " << r.two_m << " obstruction\n";
    if (!r.db_checksum.empty()) os << "database " << r.db_checksum << "\n";
    os << "\n";
    for (const BatchItem& it : r.items) {
        os << it.knot << "  det " << it.determinant.str() << "  ";
        if (!it.ok) {
            os << "error: " << it.error << "\n";
            continue;
        }
        os << it.group.str() << "  " << verdict_name(it.report.verdict);
        if (it.report.verdict == Verdict::Unsupported)
            os << " (" << it.report.unsupported_reason << ")";
        if (it.report.fast_path_hit) os << " (nonzero d at the identity)";
        else os << "  [" << it.report.subgroups_examined << " subgroups examined]";
        if (it.report.witness) os << "  witness " << witness_compact(*it.report.witness);
        if (!no_timing) os << "  (" << it.report.elapsed_seconds << "s)";
        os << "\n";
    }
    if (!no_timing) os << "\ntotal " << r.total_elapsed_seconds << "s\n";
    return os.str();
}

std::string dtable_to_json(const DTable& t, const std::string& source) {
    ojson j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["source"] = source;
    j["group"] = t.group().str();
    j["group_factors"] = t.group().factors();
    j["origin_is_spin"] = t.origin_is_spin();
    ojson vals = ojson::array();
    for (long long i = 0; i < t.group().order(); ++i) {
        ojson e;
        e["element"] = coords_json(t.group(), i);
        e["d"] = t.value_at(i).fraction_str();
        vals.push_back(std::move(e));
    }
    j["values"] = std::move(vals);
    return j.dump(2) + "\n";
}

std::string dtable_to_csv(const DTable& t) {
    std::ostringstream os;
    os << "index,element,d\n";
    for (long long i = 0; i < t.group().order(); ++i)
        os << i << "," << element_compact(t.group(), i) << ","
           << t.value_at(i).fraction_str() << "\n";
    return os.str();
}

std::string dtable_to_text(const DTable& t, const std::string& source) {
    std::ostringstream os;
    os << "d-table over " << t.group().str() << " from " << source << "\n";
    for (long long i = 0; i < t.group().order(); ++i)
        os << "d" << t.group().element_at(i).str() << " = " << t.value_at(i).str() << "\n";
    return os.str();
}

} // namespace knotconc
