#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "jordan/json_io.hpp"

namespace jordan {
namespace cli {

// exit codes of the `jordan` tool
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kSingular = 3;
inline constexpr int kExactUnavailable = 4;

struct TaskRequest {
  std::string operation;  // additive | multiplicative | both | classify |
                          // ad-spectrum | Ad-spectrum | lie-closure
  std::optional<SquareMatrix> matrix;
  ModeRequest mode = ModeRequest::Auto;
  double tolerance = 1e-9;
  std::optional<LieStructure> lie;
  std::string target = "both";  // lie-closure: algebra | group | both
  uint64_t seed = 1;
  int samples = 100;
  bool timing = false;
};

// operation_override, when nonempty, wins over the JSON "operation" field
// (the CLI subcommand name).
TaskRequest parse_request(const nlohmann::json& j, const std::string& operation_override = "");

struct TaskOutcome {
  int exit_code = 0;
  Json report;
};

TaskOutcome run_request(const TaskRequest& request);

}  // namespace cli
}  // namespace jordan
