#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace quanthelly {

struct TrialRecord {
  std::size_t index = 0;
  // Position of the trial's entry in the config "trials" list.
  std::size_t group = 0;
  std::string kind;
  std::uint64_t seed = 0;
  // FNV-1a of the instance's family JSON.
  std::string instance_hash;
  std::map<std::string, std::string> parameters;
  // Exact rationals as "p/q" strings, counts and flags as plain text.
  std::map<std::string, std::string> measured;
  bool ok = true;
  std::string error;
};

struct ExperimentReport {
  std::vector<TrialRecord> records;
  // Keys are "group<i>.<name>".
  std::map<std::string, std::string> aggregates;
  std::vector<std::string> svgs;

  std::string to_json() const;
  std::string to_csv() const;
  /// Recomputes the aggregates from the records and compares.
  bool audit(std::string* why = nullptr) const;
};

/// Aggregates derived from trial records alone.
std::map<std::string, std::string> aggregate_records(const std::vector<TrialRecord>& records);

/// Config schema quanthelly.experiment/1:
///   {"schema", "seed", "threads", "svg", "trials": [entry...]}
/// Entry kinds and their fields:
///   floating-body-sweep: body, measure, eps (list), directions ("axis" or
///     {"farey": n}); one trial per ε.
///   helly-check: generator, h, measure, lambda, eps, repeat,
///     require_hypothesis, max_attempts.
///   pq: generator, p, q, measure, lambda, eps, s_max, repeat.
///   fractional-helly: generator, h, measure, lambda, eps, v, repeat.
/// Trial failures are recorded and the run continues.
ExperimentReport run_experiment(std::string_view config);

}  // namespace quanthelly
