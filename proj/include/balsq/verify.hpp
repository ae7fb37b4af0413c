#pragma once

#include <string>
#include <vector>

#include "balsq/linalg.hpp"

namespace balsq {

/// Result of one named property battery. Resource means a configured cap was
/// hit before the battery could finish; it is reported apart from failures.
enum class BatteryOutcome { Pass, Fail, Resource };

std::string outcome_name(BatteryOutcome outcome);

struct BatteryResult {
  std::string name;
  BatteryOutcome outcome = BatteryOutcome::Pass;
  /// Instances the battery exercised.
  long long checked = 0;
  /// First counterexample (or cap description) when not passing.
  std::string detail;
};

struct VerifyOptions {
  /// Battery name, or "all".
  std::string property = "all";
  /// Cap on corpus items (order ideals across all signatures; the same cap
  /// bounds each derived ideal family).
  long long max_count = 200;
  std::uint64_t seed = 1;
  FieldConfig field = FieldConfig::rationals();
};

/// Names of all batteries, in execution order.
const std::vector<std::string>& battery_names();

/// Runs the selected batteries over the enumerated corpus (order ideals of
/// every signature with d <= 3 and m_i <= 2, capped; derived ideal families
/// over P(2,(2,2)) and P(3,(1,1,1))). Throws input_error for an unknown
/// property name.
std::vector<BatteryResult> run_verify(const VerifyOptions& options);

}  // namespace balsq
