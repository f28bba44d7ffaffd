#include "seamlab/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace seamlab {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& v, const std::string& where) {
    try {
        std::size_t used = 0;
        const double d = std::stod(v, &used);
        if (used != v.size() || !std::isfinite(d))
            throw std::invalid_argument("trailing characters");
        return d;
    } catch (const std::exception&) {
        throw ConfigError(where + ": expected a number, got '" + v + "'");
    }
}

int to_int(const std::string& v, const std::string& where) {
    try {
        std::size_t used = 0;
        const long n = std::stol(v, &used);
        if (used != v.size()) throw std::invalid_argument("trailing characters");
        return static_cast<int>(n);
    } catch (const std::exception&) {
        throw ConfigError(where + ": expected an integer, got '" + v + "'");
    }
}

bool to_bool(const std::string& v, const std::string& where) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError(where + ": expected a boolean, got '" + v + "'");
}

std::vector<std::string> split(const std::string& v, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(v);
    while (std::getline(in, cur, sep)) parts.push_back(trim(cur));
    return parts;
}

VariableTransform to_transform(const std::string& v, const std::string& where) {
    if (v == "log-substitution") return VariableTransform::LogSubstitution;
    if (v == "de-halfline") return VariableTransform::DoubleExponentialHalfline;
    if (v == "de-real-line") return VariableTransform::DoubleExponentialRealLine;
    throw ConfigError(where + ": unknown transform '" + v +
                      "' (log-substitution, de-halfline, de-real-line)");
}

const char* transform_name(VariableTransform t) {
    switch (t) {
    case VariableTransform::LogSubstitution: return "log-substitution";
    case VariableTransform::DoubleExponentialHalfline: return "de-halfline";
    case VariableTransform::DoubleExponentialRealLine: return "de-real-line";
    }
    return "?";
}

// One key = value assignment, key already section-qualified.  `where` names
// the file:line (or the override) for diagnostics.
void apply(RunConfig& c, const std::string& key, const std::string& value,
           const std::string& where) {
    if (key == "command") {
        c.command = parse_command(value);
    } else if (key == "out_dir") {
        c.out_dir = value;
    } else if (key == "report.deterministic") {
        c.deterministic = to_bool(value, where);
    } else if (key == "quadrature.node_count") {
        c.quad.node_count = to_int(value, where);
    } else if (key == "quadrature.transform") {
        c.quad.transform = to_transform(value, where);
    } else if (key == "quadrature.target_tol") {
        c.quad.target_tol = to_double(value, where);
    } else if (key == "quadrature.refinement_limit") {
        c.quad.refinement_limit = to_int(value, where);
    } else if (key == "series.tail_tol") {
        c.series.tail_tol = to_double(value, where);
    } else if (key == "series.n_max") {
        c.series.n_max = to_int(value, where);
    } else if (key == "verify.grid_points") {
        c.verify_grid_points = to_int(value, where);
    } else if (key == "kernel.t_lo") {
        c.kernel_t_lo = to_double(value, where);
    } else if (key == "kernel.t_hi") {
        c.kernel_t_hi = to_double(value, where);
    } else if (key == "kernel.points") {
        c.kernel_points = to_int(value, where);
    } else if (key == "zeros.z_max") {
        c.zeros_z_max = to_double(value, where);
    } else if (key == "zeros.tol") {
        c.zeros_tol = to_double(value, where);
    } else if (key == "ulclt.t") {
        c.ulclt_t = to_double(value, where);
    } else if (key == "ulclt.sizes") {
        c.ulclt_sizes.clear();
        for (const std::string& p : split(value, ','))
            if (!p.empty()) c.ulclt_sizes.push_back(to_int(p, where));
    } else if (key == "ulclt.window_lo") {
        c.ulclt_window_lo = to_double(value, where);
    } else if (key == "ulclt.window_hi") {
        c.ulclt_window_hi = to_double(value, where);
    } else if (key == "scan.schedule") {
        c.scan_schedule.clear();
        for (const std::string& p : split(value, ',')) {
            if (p.empty()) continue;
            const auto colon = p.find(':');
            if (colon == std::string::npos)
                throw ConfigError(where + ": schedule entries are T:N pairs,"
                                          " got '" + p + "'");
            c.scan_schedule.emplace_back(
                to_double(trim(p.substr(0, colon)), where),
                to_int(trim(p.substr(colon + 1)), where));
        }
    } else if (key == "scan.eta") {
        c.scan_eta = to_double(value, where);
    } else if (key == "scan.samples") {
        c.scan_samples = to_int(value, where);
    } else if (key == "scan.theta") {
        c.scan_theta = to_double(value, where);
    } else if (key == "scan.zero_tol") {
        c.scan_zero_tol = to_double(value, where);
    } else if (key == "scan.indent_radius") {
        c.scan_indent_radius = to_double(value, where);
    } else if (key == "seam.N") {
        c.seam_N = to_int(value, where);
    } else if (key == "seam.T") {
        c.seam_T = to_double(value, where);
    } else {
        throw ConfigError(where + ": unknown key '" + key + "'");
    }
}

void check_invariants(const RunConfig& c) {
    validate(c.quad); // node_count / tolerance / refinement budget
    auto positive = [](double v, const char* key) {
        if (!(v > 0.0))
            throw ConfigError(std::string("config: ") + key +
                              " must be positive");
    };
    positive(c.series.tail_tol, "series.tail_tol");
    if (c.series.n_max < 1)
        throw ConfigError("config: series.n_max must be >= 1");
    if (c.verify_grid_points < 1)
        throw ConfigError("config: verify.grid_points must be >= 1 (grid"
                          " non-empty)");
    positive(c.kernel_t_lo, "kernel.t_lo");
    if (!(c.kernel_t_hi > c.kernel_t_lo))
        throw ConfigError("config: kernel.t_hi must exceed kernel.t_lo");
    if (c.kernel_points < 2)
        throw ConfigError("config: kernel.points must be >= 2 (grid"
                          " non-empty)");
    positive(c.zeros_z_max, "zeros.z_max");
    positive(c.zeros_tol, "zeros.tol");
    positive(c.ulclt_t, "ulclt.t");
    if (c.ulclt_sizes.empty())
        throw ConfigError("config: ulclt.sizes must be non-empty");
    for (int n : c.ulclt_sizes)
        if (n < 3) throw ConfigError("config: ulclt.sizes entries must be >= 3");
    positive(c.ulclt_window_lo, "ulclt.window_lo");
    if (!(c.ulclt_window_hi > c.ulclt_window_lo))
        throw ConfigError("config: ulclt.window_hi must exceed"
                          " ulclt.window_lo");
    if (c.scan_schedule.empty())
        throw ConfigError("config: scan.schedule must be non-empty");
    double prev_T = 0.0;
    for (const auto& [T, N] : c.scan_schedule) {
        if (!(T > prev_T))
            throw ConfigError("config: scan.schedule must be strictly"
                              " increasing in T");
        if (N < 3)
            throw ConfigError("config: scan.schedule N entries must be >= 3");
        prev_T = T;
    }
    positive(c.scan_eta, "scan.eta");
    if (c.scan_samples < 256)
        throw ConfigError("config: scan.samples must be >= 256");
    if (!(c.scan_theta > 0.0 && c.scan_theta < 1.5707963267948966))
        throw ConfigError("config: scan.theta must lie in (0, pi/2)");
    positive(c.scan_zero_tol, "scan.zero_tol");
    positive(c.scan_indent_radius, "scan.indent_radius");
    if (c.seam_N < 3) throw ConfigError("config: seam.N must be >= 3");
    positive(c.seam_T, "seam.T");
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

const char* command_name(Command c) {
    switch (c) {
    case Command::VerifyIdentities: return "verify-identities";
    case Command::KernelTable: return "kernel-table";
    case Command::Ulclt: return "ulclt";
    case Command::Zeros: return "zeros";
    case Command::ScanRectangle: return "scan-rectangle";
    case Command::SeamReport: return "seam-report";
    }
    return "?";
}

Command parse_command(const std::string& name) {
    for (Command c : {Command::VerifyIdentities, Command::KernelTable,
                      Command::Ulclt, Command::Zeros, Command::ScanRectangle,
                      Command::SeamReport})
        if (name == command_name(c)) return c;
    throw ConfigError("unknown command '" + name +
                      "' (verify-identities, kernel-table, ulclt, zeros,"
                      " scan-rectangle, seam-report)");
}

RunConfig load_config(const std::string& config_path,
                      const std::vector<std::string>& overrides) {
    RunConfig c;

    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in)
            throw ConfigError("config: cannot open '" + config_path + "'");
        std::string line;
        std::string section;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const std::string where =
                config_path + ":" + std::to_string(lineno);
            std::string t = trim(line);
            if (t.empty() || t[0] == '#' || t[0] == ';') continue;
            if (t.front() == '[') {
                if (t.back() != ']')
                    throw ConfigError(where + ": malformed section header");
                section = trim(t.substr(1, t.size() - 2));
                continue;
            }
            const auto eq = t.find('=');
            if (eq == std::string::npos)
                throw ConfigError(where + ": expected key = value");
            std::string key = trim(t.substr(0, eq));
            const std::string value = trim(t.substr(eq + 1));
            if (key.empty())
                throw ConfigError(where + ": empty key");
            if (!section.empty()) key = section + "." + key;
            apply(c, key, value, where);
        }
    }

    for (const std::string& ov : overrides) {
        const auto eq = ov.find('=');
        if (eq == std::string::npos)
            throw ConfigError("override '" + ov + "': expected key=value");
        const std::string key = trim(ov.substr(0, eq));
        const std::string value = trim(ov.substr(eq + 1));
        apply(c, key, value, "override '" + key + "'");
    }

    check_invariants(c);
    return c;
}

std::vector<std::pair<std::string, std::string>> config_echo(const RunConfig& c) {
    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("command", command_name(c.command));
    kv.emplace_back("out_dir", c.out_dir);
    kv.emplace_back("report.deterministic", c.deterministic ? "true" : "false");
    kv.emplace_back("quadrature.node_count", std::to_string(c.quad.node_count));
    kv.emplace_back("quadrature.transform", transform_name(c.quad.transform));
    kv.emplace_back("quadrature.target_tol", fmt_double(c.quad.target_tol));
    kv.emplace_back("quadrature.refinement_limit",
                    std::to_string(c.quad.refinement_limit));
    kv.emplace_back("series.tail_tol", fmt_double(c.series.tail_tol));
    kv.emplace_back("series.n_max", std::to_string(c.series.n_max));
    kv.emplace_back("verify.grid_points", std::to_string(c.verify_grid_points));
    kv.emplace_back("kernel.t_lo", fmt_double(c.kernel_t_lo));
    kv.emplace_back("kernel.t_hi", fmt_double(c.kernel_t_hi));
    kv.emplace_back("kernel.points", std::to_string(c.kernel_points));
    kv.emplace_back("zeros.z_max", fmt_double(c.zeros_z_max));
    kv.emplace_back("zeros.tol", fmt_double(c.zeros_tol));
    kv.emplace_back("ulclt.t", fmt_double(c.ulclt_t));
    {
        std::string s;
        for (std::size_t i = 0; i < c.ulclt_sizes.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c.ulclt_sizes[i]);
        }
        kv.emplace_back("ulclt.sizes", s);
    }
    kv.emplace_back("ulclt.window_lo", fmt_double(c.ulclt_window_lo));
    kv.emplace_back("ulclt.window_hi", fmt_double(c.ulclt_window_hi));
    {
        std::string s;
        for (std::size_t i = 0; i < c.scan_schedule.size(); ++i) {
            if (i) s += ",";
            s += fmt_double(c.scan_schedule[i].first) + ":" +
                 std::to_string(c.scan_schedule[i].second);
        }
        kv.emplace_back("scan.schedule", s);
    }
    kv.emplace_back("scan.eta", fmt_double(c.scan_eta));
    kv.emplace_back("scan.samples", std::to_string(c.scan_samples));
    kv.emplace_back("scan.theta", fmt_double(c.scan_theta));
    kv.emplace_back("scan.zero_tol", fmt_double(c.scan_zero_tol));
    kv.emplace_back("scan.indent_radius", fmt_double(c.scan_indent_radius));
    kv.emplace_back("seam.N", std::to_string(c.seam_N));
    kv.emplace_back("seam.T", fmt_double(c.seam_T));
    return kv;
}

} // namespace seamlab
