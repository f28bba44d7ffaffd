#pragma once

#include <string>
#include <utility>
#include <vector>

#include "seamlab/errors.hpp"
#include "seamlab/quadrature.hpp"
#include "seamlab/theta_kernels.hpp"

namespace seamlab {

enum class Command {
    VerifyIdentities,
    KernelTable,
    Ulclt,
    Zeros,
    ScanRectangle,
    SeamReport,
};

const char* command_name(Command c);
Command parse_command(const std::string& name); // throws ConfigError

// Everything a run needs, resolved from defaults, config file, and
// command-line overrides (in that order).  Config format: flat
// `key = value` lines grouped under [section] headers; keys below are the
// section-qualified names.
struct RunConfig {
    Command command = Command::VerifyIdentities;
    std::string out_dir = "out"; // --out

    // [report] deterministic: suppress wall-clock times in records so two
    // runs of the same config produce byte-identical files.
    bool deterministic = true;

    // [quadrature] node_count, transform, target_tol, refinement_limit
    QuadratureSpec quad{};

    // [series] tail_tol, n_max
    TruncationPolicy series{};

    // [verify] grid_points: points per identity-check grid
    int verify_grid_points = 40;

    // [kernel] t_lo, t_hi, points: log grid for the kernel table
    double kernel_t_lo = 0.05;
    double kernel_t_hi = 20.0;
    int kernel_points = 64;

    // [zeros] z_max, tol
    double zeros_z_max = 22.0;
    double zeros_tol = 1e-9;

    // [ulclt] t, sizes, window_lo, window_hi
    double ulclt_t = 1.0;
    std::vector<int> ulclt_sizes = {32, 64, 128, 256};
    double ulclt_window_lo = 0.25;
    double ulclt_window_hi = 4.0;

    // [scan] schedule (T:N pairs, T increasing), eta, samples, theta,
    // zero_tol, indent_radius.  Default schedule follows N = 8 ceil(T)
    // (floored at 7), the desk-scale ladder used throughout.
    std::vector<std::pair<double, int>> scan_schedule = {
        {2.0, 16}, {4.0, 32}, {8.0, 64}};
    double scan_eta = 0.2;
    int scan_samples = 512;
    double scan_theta = 1.0;
    // zero_tol sits far below the Xi boundary floor at desk scales (~1e-6
    // at T = 8) so only genuine boundary zeros trigger detours.
    double scan_zero_tol = 1e-9;
    double scan_indent_radius = 1e-3;

    // [seam] N, T: rectangle for the seam boundary-trace export
    int seam_N = 64;
    double seam_T = 4.0;
};

// Parse a config file (empty path = defaults only), then apply
// `key=value` override strings.  Throws ConfigError with file:line for
// malformed lines, and with the key name for unknown keys, type mismatches,
// or violated invariants (tolerances > 0, grids non-empty, schedule
// monotone in T).
RunConfig load_config(const std::string& config_path,
                      const std::vector<std::string>& overrides);

// The resolved configuration as ordered key = value text, echoed into
// report envelopes.
std::vector<std::pair<std::string, std::string>> config_echo(const RunConfig& c);

} // namespace seamlab
