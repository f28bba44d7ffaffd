#pragma once

#include <vector>

#include "seamlab/config.hpp"
#include "seamlab/report.hpp"

namespace seamlab {

struct RunOutput {
    ReportEnvelope envelope;
    std::vector<GridExport> grids;
};

// Execute one command.  Record names are a function of the command alone:
// a numeric error inside a check is caught and folded into that check's
// record as outcome = fail (with the error text), never dropped and never
// allowed to abort the remaining records.
RunOutput run(const RunConfig& config);

} // namespace seamlab
