#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace mfib::cli {

enum ExitCode { kPass = 0, kCertificateFailure = 1, kUsage = 2 };

struct RunConfig {
  int n = 4;
  std::uint64_t seed = 0xC0FFEE;
  std::size_t samples = 1000;
  std::optional<double> tol;
  std::optional<std::string> classify;
  bool second_orbit = false;
  std::optional<int> grid;         // regular: denominator of a grid sweep
  std::string map = "mu_tilde";    // moment
  std::optional<std::string> z;    // moment: complex coordinates
  std::optional<std::string> matrix;
  std::string kind;                // fiber
  double x0 = 0, x1 = 1.0 / 6;     // curve
  std::optional<std::string> only; // report
};

struct Result {
  nlohmann::json output;
  int code = kPass;
};

// Each command validates its inputs and throws UsageError on bad ones.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Result cmd_chambers(const RunConfig& cfg);
Result cmd_regular(const RunConfig& cfg);
Result cmd_moment(const RunConfig& cfg);
Result cmd_fiber(const RunConfig& cfg);
Result cmd_jacobian(const RunConfig& cfg);
Result cmd_transition(const RunConfig& cfg);
Result cmd_triangle(const RunConfig& cfg);
Result cmd_curve(const RunConfig& cfg);
Result cmd_report(const RunConfig& cfg);

}  // namespace mfib::cli
