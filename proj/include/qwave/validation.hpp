#ifndef QWAVE_VALIDATION_HPP
#define QWAVE_VALIDATION_HPP

// Self-checks run by `qwave validate` and by the acceptance test binary. Each
// suite cross-checks one layer against an independent route (closed form vs
// shooting, solver vs region inequalities, coupled vs decoupled PDE, ...).

#include <cstdint>
#include <string>
#include <vector>

namespace qwave {

struct SuiteResult {
  std::string name;
  bool passed = true;
  /// One line per measured quantity or failure.
  std::vector<std::string> details;
  double seconds = 0.0;
};

/// Suite names in acceptance order.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws InvalidArgument for an
/// unknown name.
std::vector<SuiteResult> run_suite(const std::string& name, std::uint64_t seed = 20240611);

}  // namespace qwave

#endif  // QWAVE_VALIDATION_HPP
