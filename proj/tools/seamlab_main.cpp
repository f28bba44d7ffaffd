#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seamlab/commands.hpp"
#include "seamlab/config.hpp"
#include "seamlab/report.hpp"
#include "seamlab/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"seamlab -- numerical checks for the strip/seam analysis"};
    app.set_version_flag("--version", seamlab::kVersion);

    std::string command;
    std::string config_path;
    std::string out_dir;
    std::vector<std::string> overrides;

    app.add_option("command", command,
                   "one of: verify-identities, kernel-table, ulclt, zeros, "
                   "scan-rectangle, seam-report")
        ->required();
    app.add_option("--config", config_path, "config file (key = value lines)");
    app.add_option("--out", out_dir, "output directory (wins over the config)");
    app.add_option("--override", overrides,
                   "key=value applied after the config file (repeatable)");

    CLI11_PARSE(app, argc, argv);

    try {
        seamlab::RunConfig cfg = seamlab::load_config(config_path, overrides);
        cfg.command = seamlab::parse_command(command);
        if (!out_dir.empty()) cfg.out_dir = out_dir;

        const seamlab::RunOutput out = seamlab::run(cfg);

        seamlab::write_report(out.envelope, cfg.out_dir);
        for (const seamlab::GridExport& g : out.grids)
            seamlab::export_grid(g.name, g.axes, g.columns, cfg.out_dir);

        int pass = 0, fail = 0, diag = 0;
        for (const seamlab::Record& r : out.envelope.records) {
            const char* o = seamlab::outcome_name(r.outcome);
            std::printf("%-10s %-28s est_error=%.3e\n", o, r.name.c_str(),
                        r.est_error);
            switch (r.outcome) {
            case seamlab::Outcome::Pass: ++pass; break;
            case seamlab::Outcome::Fail: ++fail; break;
            case seamlab::Outcome::Diagnostic: ++diag; break;
            }
        }
        std::printf("%s: %zu records, %d pass, %d fail, %d diagnostic\n",
                    out.envelope.command.c_str(), out.envelope.records.size(),
                    pass, fail, diag);
        std::printf("report: %s/report.json", cfg.out_dir.c_str());
        for (const seamlab::GridExport& g : out.grids)
            std::printf("  %s/%s.csv", cfg.out_dir.c_str(), g.name.c_str());
        std::printf("\n");
        return fail == 0 ? 0 : 1;
    } catch (const seamlab::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
