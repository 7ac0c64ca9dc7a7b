#pragma once
#include "gmact/interpolation.hpp"
#include "gmact/report.hpp"
#include "gmact/spec_io.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace gmact::cli {

/// Batch front door. Returns the process exit code:
///   0 all checks passed, 1 a check failed, 2 bad input, 3 resource cap hit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Full verification battery for one algebra spec; one record per check.
Report run_verify(const AlgebraSpec& spec, const gb::Options& opts = gb::default_options());

/// The two-chart projective-line walkthrough: per-chart fixed points,
/// attractors and repellers, plus the localization consistency on the
/// overlap.
Report demo_p1(const gb::Options& opts = gb::default_options());

} // namespace gmact::cli
