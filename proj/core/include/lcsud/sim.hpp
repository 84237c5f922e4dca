#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lcsud/assignment.hpp"
#include "lcsud/elasticity.hpp"
#include "lcsud/rational.hpp"
#include "lcsud/schemes.hpp"

namespace lcsud {

/// Storage placement strategy across time steps.
enum class PlacementMode {
  PerRealization,         // re-place whenever the realization changes
  UnionOverRealizations,  // one-time union placement serving all of them
};

PlacementMode placement_from_string(const std::string& s);
std::string placement_to_string(PlacementMode mode);

struct ScheduleStep {
  std::vector<int> available;
  std::vector<int> stragglers;
};

enum class StragglerPolicyKind { None, FixedSet, SeededRandom, AdversarialPerGroup };

struct StragglerPolicySpec {
  StragglerPolicyKind kind = StragglerPolicyKind::None;
  std::vector<int> machines;  // fixed-set members
  int count = 0;              // seeded-random draw size
};

using StragglerGenerator =
    std::function<std::vector<int>(int step, const AvailabilityRealization&,
                                   const ComputationAssignment&)>;

/// Deterministic straggler selection. "adversarial-per-group" concentrates
/// S stragglers inside a single group each step, the worst pattern the
/// assignment must still tolerate.
StragglerGenerator make_straggler_policy(const StragglerPolicySpec& spec,
                                         int straggler_tolerance,
                                         std::uint64_t seed);

struct SimConfig {
  SystemParams params{};
  SchemeId scheme = SchemeId::Scheme1;
  std::uint64_t modulus = kDefaultModulus;
  ProblemShape shape{};
  std::uint64_t seed = 0;
  PlacementMode placement = PlacementMode::PerRealization;
  /// Explicit schedule; when empty, one is generated from steps and policy.
  std::vector<ScheduleStep> schedule;
  int steps = 1;
  StragglerPolicySpec policy;

  /// Explicit schedule with policy stragglers resolved. Deterministic.
  std::vector<ScheduleStep> resolved_schedule() const;
  /// Throws ConfigError on any violation, before any step runs.
  void validate() const;
};

/// Parses the JSON configuration document. Throws ConfigError on malformed
/// or inconsistent input.
SimConfig parse_sim_config(const std::string& json_text);
std::string sim_config_to_json(const SimConfig& config);

struct MachineStepLedger {
  int machine = 0;
  long download_symbols = 0;
  long upload_symbols = 0;
  long compute_mults = 0;
};

/// Storage materialized at one (re)placement point.
struct PlacementLedger {
  int step = 0;  // step before which this placement happened
  std::vector<int> machines;
  std::vector<long> storage_symbols;
  std::vector<Rational> storage_normalized;
  std::vector<long> encoding_mults;
};

struct StepRecord {
  int step = 0;
  std::vector<int> available;
  std::vector<int> stragglers;
  bool success = false;
  bool decoded_matches_oracle = false;
  int groups_decoded = 0;
  int stragglers_tolerated = 0;
  long decode_mults = 0;
  std::string failure;  // empty on success
  std::vector<MachineStepLedger> machines;  // one row per machine in [N]
};

struct SimReport {
  SimConfig config;
  std::vector<PlacementLedger> placements;
  std::vector<StepRecord> steps;
  long total_download_symbols = 0;
  long total_upload_symbols = 0;
  long total_compute_mults = 0;
  int steps_succeeded = 0;
  int steps_failed = 0;

  bool all_success() const { return steps_failed == 0; }
};

/// Runs the time-stepped pipeline: placement, download, computing, decoding
/// and oracle comparison per step. Deterministic for a given config.
/// Throws ConfigError before any step on invalid input; straggler overload
/// is recorded as a failed step, not an error.
SimReport run_simulation(const SimConfig& config);

std::string sim_report_to_json(const SimReport& report);
/// CSV ledger: step,machine,download_symbols,upload_symbols,compute_mults,success
std::string sim_report_to_csv(const SimReport& report);

/// Thread cap from LCSUD_THREADS (>= 1); 1 when unset or invalid.
int thread_cap_from_env();

/// Per-step input seed derivation (splitmix-style, platform independent).
std::uint64_t step_seed(std::uint64_t seed, int step);

}  // namespace lcsud
