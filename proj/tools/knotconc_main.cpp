#include "knotconc/errors.hpp"
#include "knotconc/knot_db.hpp"
#include "knotconc/report.hpp"
#include "knotconc/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace knotconc;

struct CommonOut {
    std::string format = "text";
    bool no_timing = false;
};

void add_format_flags(CLI::App* cmd, CommonOut& out) {
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_flag("--no-timing", out.no_timing, "omit elapsed-time fields (deterministic output)");
}

void print_dtable(const DTable& t, const std::string& source, const CommonOut& out) {
    if (out.format == "json")
        std::cout << dtable_to_json(t, source);
    else if (out.format == "csv")
        std::cout << dtable_to_csv(t);
    else
        std::cout << dtable_to_text(t, source);
}

void print_report(const BatchReport& rep, const CommonOut& out) {
    if (out.format == "json")
        std::cout << report_to_json(rep, out.no_timing);
    else if (out.format == "csv")
        std::cout << report_to_csv(rep, out.no_timing);
    else
        std::cout << report_to_text(rep, out.no_timing);
}

GoeritzForm form_from_file(const std::string& file, long long twist) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open " + file);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(file + ": " + e.what());
    }
    if (j.is_object() && j.contains("vertices")) {
        WhiteGraph g;
        g.vertex_count = j.at("vertices").get<int>();
        g.dropped = j.value("dropped", 0);
        for (const auto& e : j.at("edges")) g.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
        std::vector<int> ordering;
        if (j.contains("ordering"))
            ordering = j["ordering"].get<std::vector<int>>();
        if (twist > 0)
            return GoeritzForm(extend_twisted(graph_to_goeritz(g, ordering).matrix(), twist));
        return graph_to_goeritz(g, ordering);
    }
    const nlohmann::json& jm = j.is_object() && j.contains("matrix") ? j["matrix"] : j;
    if (!jm.is_array()) throw ParseError(file + ": expected a matrix, {\"matrix\":…}, or a white graph");
    std::vector<std::vector<long long>> rows;
    for (const auto& r : jm) rows.push_back(r.get<std::vector<long long>>());
    IntMatrix m = IntMatrix::from_rows(rows);
    if (twist > 0) m = extend_twisted(m, twist);
    return GoeritzForm(std::move(m));
}

int run(int argc, char** argv) {
    CLI::App app{"correction terms of double branched covers, with concordance-order obstructions"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);
    std::string exe_dir = std::filesystem::path(argv[0]).parent_path().string();

    // dtable lens / dtable goeritz
    auto* dtable = app.add_subcommand("dtable", "print a correction-term table");
    dtable->require_subcommand(1);
    long long p = 0, q = 0, twist = 0;
    bool negate = false;
    int jobs = 1;
    CommonOut dt_out;
    auto* lens = dtable->add_subcommand("lens", "lens space L(p,q) by the recursion");
    lens->add_option("--p", p, "order p")->required();
    lens->add_option("--q", q, "parameter q")->required();
    lens->add_flag("--negate", negate, "reversed orientation (negated table)");
    add_format_flags(lens, dt_out);
    auto* goe = dtable->add_subcommand("goeritz", "negative definite Goeritz form from a file");
    std::string file;
    goe->add_option("--file", file, "JSON matrix, {\"matrix\":…}, or white graph")->required();
    goe->add_option("--twist", twist, "append a twisted region with k >= 1 negative half-twists");
    goe->add_option("--jobs", jobs, "worker threads");
    add_format_flags(goe, dt_out);

    // obstruct
    auto* obstruct = app.add_subcommand("obstruct", "test one knot for concordance order 2m");
    std::string knot, db_path;
    int order = 0;
    int ob_jobs = 1;
    CommonOut ob_out;
    obstruct->add_option("--knot", knot, "knot name, e.g. 8_13")->required();
    obstruct->add_option("--order", order, "even order 2m to obstruct")->required();
    obstruct->add_option("--db", db_path, "knot database path");
    obstruct->add_option("--jobs", ob_jobs, "worker threads");
    add_format_flags(obstruct, ob_out);

    // batch
    auto* batch = app.add_subcommand("batch", "run the obstruction over the whole database");
    std::vector<std::string> batch_knots;
    std::string batch_db;
    int batch_order = 0;
    int batch_jobs = 1;
    CommonOut batch_out;
    batch->add_option("--order", batch_order, "even order 2m to obstruct")->required();
    batch->add_option("--db", batch_db, "knot database path");
    batch->add_option("--knot", batch_knots, "restrict to these knots (repeatable)");
    batch->add_option("--jobs", batch_jobs, "worker threads");
    add_format_flags(batch, batch_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help/--version exit 0; every usage mistake is 1, not CLI11's 10x codes
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (lens->parsed()) {
        DTable t = d_table_lens(LensSpace(p, q, negate ? -1 : +1));
        std::ostringstream src;
        src << "lens(" << p << "," << q << ")" << (negate ? " reversed" : "");
        print_dtable(t, src.str(), dt_out);
        return 0;
    }
    if (goe->parsed()) {
        GoeritzForm f = form_from_file(file, twist);
        DTable t = d_table_from_goeritz(f, jobs);
        std::ostringstream src;
        src << "goeritz(" << file << ")";
        if (twist > 0) src << " twist " << twist;
        print_dtable(t, src.str(), dt_out);
        return 0;
    }
    if (obstruct->parsed()) {
        if (order < 2 || order % 2 != 0) {
            std::cerr << "error: --order must be even and at least 2\n";
            return 1;
        }
        std::string path = db_path.empty() ? default_db_path(exe_dir) : db_path;
        auto records = load_knot_db(path);
        std::vector<KnotRecord> picked;
        for (auto& r : records)
            if (r.name == knot) picked.push_back(std::move(r));
        if (picked.empty()) {
            std::cerr << "error: knot \"" << knot << "\" not in " << path << "\n";
            return 1;
        }
        BatchOptions opts;
        opts.jobs = ob_jobs;
        BatchReport rep = batch_report(picked, order, opts);
        rep.db_checksum = file_checksum(path);
        print_report(rep, ob_out);
        return rep.items.at(0).ok ? 0 : 2;
    }
    if (batch->parsed()) {
        if (batch_order < 2 || batch_order % 2 != 0) {
            std::cerr << "error: --order must be even and at least 2\n";
            return 1;
        }
        std::string path = batch_db.empty() ? default_db_path(exe_dir) : batch_db;
        auto records = load_knot_db(path);
        std::vector<KnotRecord> picked;
        if (batch_knots.empty()) {
            picked = std::move(records);
        } else {
            for (const std::string& name : batch_knots) {
                auto it = std::find_if(records.begin(), records.end(),
                                       [&](const KnotRecord& r) { return r.name == name; });
                if (it == records.end()) {
                    std::cerr << "error: knot \"" << name << "\" not in " << path << "\n";
                    return 1;
                }
                picked.push_back(std::move(*it));
            }
        }
        BatchOptions opts;
        opts.jobs = batch_jobs;
        BatchReport rep = batch_report(picked, batch_order, opts);
        rep.db_checksum = file_checksum(path);
        print_report(rep, batch_out);
        return 0;
    }
    return 1;
}

} // namespace

// exit 1 for usage and file problems, 2 when the input data itself is invalid
int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const PresentationUnavailable& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const NotCoprime& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const NotNegativeDefinite& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const NotSymmetric& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const BadTwistCount& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const BadIndex& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
