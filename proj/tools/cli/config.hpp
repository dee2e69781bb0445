#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace canonphase::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitValidation = 3;

inline constexpr int kMinPhiSamples = 64;

enum class Command { curve, nopt, dist, validate };
enum class Format { csv, json };

/// lo:hi:count[:log]
struct LossGridSpec {
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;
  bool log_spaced = false;
};

struct RunConfig {
  Command command = Command::curve;
  std::optional<double> loss;
  std::optional<LossGridSpec> loss_grid;
  std::optional<int> n;
  std::optional<std::pair<int, int>> n_range;
  int phi_samples = 1024;
  std::string output_path;  ///< empty writes data to stdout
  Format format = Format::csv;
  bool normalized = false;
  unsigned jobs = 0;  ///< 0 = available parallelism
  int max_two_j = 12;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

LossGridSpec parse_loss_grid(std::string_view text);
std::pair<int, int> parse_n_range(std::string_view text);

/// Throws UsageError describing the first violated constraint.
void check_config(const RunConfig& cfg);

std::string_view command_name(Command c);
std::string_view format_name(Format f);

}  // namespace canonphase::cli
