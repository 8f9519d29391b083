#pragma once
#include "knotconc/knot_db.hpp"
#include "knotconc/obstruction.hpp"

namespace knotconc {

struct BatchOptions {
    int jobs = 1;
    bool collect_all = false;
    bool fast_path = true;
};

struct BatchItem {
    std::string knot;
    bool ok = false;
    std::string error;         // set when !ok
    Int determinant = 0;
    FiniteAbelianGroup group;  // resolved table group (ok items)
    ObstructionReport report;  // ok items
};

struct BatchReport {
    std::string tool;
    std::string version;
    std::string db_checksum;
    int two_m = 0;
    std::vector<BatchItem> items;  // sorted by knot name
    double total_elapsed_seconds = 0.0;
};

// resolve + obstruct per record; a record's failure becomes an error item,
// never an aborted batch
BatchReport batch_report(const std::vector<KnotRecord>& records, int two_m,
                         const BatchOptions& opts = {});

// Serializers. no_timing drops the elapsed fields, making identical inputs
// byte-identical outputs.
std::string report_to_json(const BatchReport& r, bool no_timing);
BatchReport report_from_json(const std::string& text);
std::string report_to_csv(const BatchReport& r, bool no_timing);
std::string report_to_text(const BatchReport& r, bool no_timing);

// d-table output for the dtable subcommand; values are exact fractions
std::string dtable_to_json(const DTable& t, const std::string& source);
std::string dtable_to_csv(const DTable& t);
std::string dtable_to_text(const DTable& t, const std::string& source);

} // namespace knotconc
