#pragma once

namespace seamlab {

inline constexpr const char* kVersion = "0.1.0";

// Bumped whenever the report envelope layout changes incompatibly.
inline constexpr int kReportSchemaVersion = 1;

} // namespace seamlab
