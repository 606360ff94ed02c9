#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bvineq {

enum class Command { verify, sharpness, landau, minimize, kernel };
enum class OutputFormat { json, csv };

/// Exit statuses shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Bad flags or an invalid configuration.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::verify;
  std::uint64_t seed = 0;
  int count = 100;
  std::vector<double> p_list{1.0, 2.0};
  double tolerance = 1e-9;
  OutputFormat output_format = OutputFormat::csv;
  std::optional<std::string> output_path;

  // verify
  std::optional<std::string> function_file;
  bool ostrowski = false;
  // landau
  std::optional<std::string> registry_file;
  int samples = 1000;
  // minimize
  double C = 1, D = 1, r = 1, u = 1;
  // kernel
  double kernel_a = 0, kernel_b = 1;

  /// Throws UsageError when an invariant does not hold.
  void validate() const;
};

std::string to_string(Command command);

/// Each command writes its report stream to `out` and returns an exit status.
/// UsageError propagates for invalid configurations.
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_sharpness(const RunConfig& cfg, std::ostream& out);
int cmd_landau(const RunConfig& cfg, std::ostream& out);
int cmd_minimize(const RunConfig& cfg, std::ostream& out);
int cmd_kernel(const RunConfig& cfg, std::ostream& out);

/// Dispatches on cfg.command; maps UsageError to kExitUsage with a message on `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace bvineq
