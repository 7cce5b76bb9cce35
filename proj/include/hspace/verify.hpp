#pragma once

#include "hspace/report.hpp"

namespace hspace {

/// Samples points and runs the selected suites; per-point module errors are
/// recorded in the suite result and fail it rather than aborting the run.
/// SamplingError propagates (exit code 3 at the CLI).
RunReport run_verify(const RunConfig& cfg);

}  // namespace hspace
