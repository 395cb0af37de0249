#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "simplexharm/report.hpp"

namespace simplexharm::verify {

using report::CheckResult;
using report::Json;

/// Absolute tolerance for real-valued golden comparisons.
inline constexpr double kRealTolerance = 1e-9;

/// Section names accepted by verify_section, in verify_all order.
const std::vector<std::string>& sections();

/// Checks for one group of golden tables; throws ArgumentError for an unknown
/// section.
std::vector<CheckResult> verify_section(const Json& golden, std::string_view section);

/// Compares every computed table against the golden document.
///
/// Cells listed under "errata" must match their corrected value and must still
/// differ from the printed one; both conditions are reported as checks.
std::vector<CheckResult> verify_all(const Json& golden);

/// Copy of `golden` with the value at `pointer` perturbed: integers +1,
/// reals +1e-3, strings suffixed with "'". Throws ArgumentError for a missing
/// pointer or a non-scalar target.
Json inject_fault(const Json& golden, const std::string& pointer);

}  // namespace simplexharm::verify
