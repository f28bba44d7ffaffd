#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "seamlab/config.hpp"
#include "seamlab/types.hpp"

namespace seamlab {

using ordered_json = nlohmann::ordered_json;

// pass/fail for checks the toolkit can decide; diagnostic for quantities it
// can only measure (normalization residuals, hypothesis margins).
enum class Outcome { Pass, Fail, Diagnostic };

const char* outcome_name(Outcome o);

struct Record {
    std::string name;
    ordered_json inputs = ordered_json::object();
    ordered_json values = ordered_json::object();
    double est_error = 0.0;
    Outcome outcome = Outcome::Diagnostic;
    double wall_time_s = 0.0;
};

struct ReportEnvelope {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<Record> records;

    int fail_count() const;
};

ordered_json envelope_to_json(const ReportEnvelope& env);

// Serialize and write <out_dir>/report.json (creating the directory).
// Throws IoError on filesystem failure.
void write_report(const ReportEnvelope& env, const std::string& out_dir);

// JSON encoding helpers shared by records: complex numbers as {re, im},
// doubles passed through (nlohmann prints shortest round-trip form).
ordered_json json_complex(cplx z);

// --- grid export -----------------------------------------------------------

struct GridAxis {
    std::string name;
    std::vector<double> values;
};

// One value column over the full axis product, stored row-major with the
// first axis slowest.  Complex columns split into <name>_re, <name>_im in
// the file.
struct GridColumn {
    std::string name;
    bool complex_valued = false;
    std::vector<cplx> values;
};

// Write <out_dir>/<name>.csv: header row naming axes and columns, then one
// row per point of the axis product, ordered lexicographically by the axis
// tuple, every number rendered with 17 significant digits.  Throws IoError
// on write failure and DomainError on shape mismatch.
void export_grid(const std::string& name, const std::vector<GridAxis>& axes,
                 const std::vector<GridColumn>& columns,
                 const std::string& out_dir);

// A grid waiting to be written; commands produce these alongside the
// envelope so the CLI owns all filesystem traffic.
struct GridExport {
    std::string name;
    std::vector<GridAxis> axes;
    std::vector<GridColumn> columns;
};

} // namespace seamlab
