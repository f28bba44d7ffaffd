#include "seamlab/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "seamlab/errors.hpp"
#include "seamlab/version.hpp"

namespace seamlab {

namespace {

std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::string& out_dir, const std::string& file) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw IoError("cannot create output directory '" + out_dir +
                      "': " + ec.message());
    const std::string path = out_dir + "/" + file;
    std::ofstream out(path, std::ios::binary); // no platform newline games
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    return out;
}

} // namespace

const char* outcome_name(Outcome o) {
    switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Diagnostic: return "diagnostic";
    }
    return "?";
}

int ReportEnvelope::fail_count() const {
    int n = 0;
    for (const Record& r : records)
        if (r.outcome == Outcome::Fail) ++n;
    return n;
}

ordered_json json_complex(cplx z) {
    return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

ordered_json envelope_to_json(const ReportEnvelope& env) {
    ordered_json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["toolkit_version"] = kVersion;
    doc["command"] = env.command;
    ordered_json cfg = ordered_json::object();
    for (const auto& [k, v] : env.config) cfg[k] = v;
    doc["config"] = std::move(cfg);

    ordered_json recs = ordered_json::array();
    int pass = 0, fail = 0, diag = 0;
    for (const Record& r : env.records) {
        ordered_json jr;
        jr["name"] = r.name;
        jr["inputs"] = r.inputs;
        jr["values"] = r.values;
        jr["est_error"] = r.est_error;
        jr["outcome"] = outcome_name(r.outcome);
        jr["wall_time_s"] = r.wall_time_s;
        recs.push_back(std::move(jr));
        switch (r.outcome) {
        case Outcome::Pass: ++pass; break;
        case Outcome::Fail: ++fail; break;
        case Outcome::Diagnostic: ++diag; break;
        }
    }
    doc["records"] = std::move(recs);
    doc["summary"] = ordered_json{{"records", env.records.size()},
                                  {"pass", pass},
                                  {"fail", fail},
                                  {"diagnostic", diag}};
    return doc;
}

void write_report(const ReportEnvelope& env, const std::string& out_dir) {
    std::ofstream out = open_out(out_dir, "report.json");
    out << envelope_to_json(env).dump(2) << "\n";
    if (!out) throw IoError("failed writing report.json under " + out_dir);
}

void export_grid(const std::string& name, const std::vector<GridAxis>& axes,
                 const std::vector<GridColumn>& columns,
                 const std::string& out_dir) {
    if (axes.empty()) throw DomainError("export_grid: no axes");
    std::size_t total = 1;
    for (const GridAxis& ax : axes) {
        if (ax.values.empty())
            throw DomainError("export_grid: axis '" + ax.name + "' is empty");
        total *= ax.values.size();
    }
    for (const GridColumn& col : columns)
        if (col.values.size() != total)
            throw DomainError("export_grid: column '" + col.name + "' has " +
                              std::to_string(col.values.size()) +
                              " values for a grid of " + std::to_string(total));

    std::ofstream out = open_out(out_dir, name + ".csv");
    for (std::size_t i = 0; i < axes.size(); ++i)
        out << (i ? "," : "") << axes[i].name;
    for (const GridColumn& col : columns) {
        if (col.complex_valued)
            out << "," << col.name << "_re," << col.name << "_im";
        else
            out << "," << col.name;
    }
    out << "\n";

    // Row-major with the first axis slowest == rows sorted lexicographically
    // by the axis tuple (axes are emitted in their given order).
    std::vector<std::size_t> idx(axes.size(), 0);
    for (std::size_t row = 0; row < total; ++row) {
        for (std::size_t a = 0; a < axes.size(); ++a)
            out << (a ? "," : "") << num17(axes[a].values[idx[a]]);
        for (const GridColumn& col : columns) {
            const cplx v = col.values[row];
            out << "," << num17(v.real());
            if (col.complex_valued) out << "," << num17(v.imag());
        }
        out << "\n";
        for (std::size_t a = axes.size(); a-- > 0;) {
            if (++idx[a] < axes[a].values.size()) break;
            idx[a] = 0;
        }
    }
    if (!out) throw IoError("failed writing " + name + ".csv under " + out_dir);
}

} // namespace seamlab
