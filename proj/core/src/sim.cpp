#include "lcsud/sim.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "lcsud/lagrange.hpp"

namespace lcsud {

namespace {

using nlohmann::json;

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

void run_parallel(int jobs, int threads, const std::function<void(int)>& work) {
  threads = std::min(threads, jobs);
  if (threads <= 1) {
    for (int i = 0; i < jobs; ++i) work(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (int i = t; i < jobs; i += threads) work(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace

std::uint64_t step_seed(std::uint64_t seed, int step) {
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(step + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

int thread_cap_from_env() {
  const char* raw = std::getenv("LCSUD_THREADS");
  if (raw == nullptr) return 1;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1) return 1;
  return static_cast<int>(std::min<long>(value, 256));
}

PlacementMode placement_from_string(const std::string& s) {
  if (s == "per-realization") return PlacementMode::PerRealization;
  if (s == "union") return PlacementMode::UnionOverRealizations;
  throw ConfigError("unknown placement mode: " + s);
}

std::string placement_to_string(PlacementMode mode) {
  return mode == PlacementMode::PerRealization ? "per-realization" : "union";
}

namespace {

std::string policy_kind_to_string(StragglerPolicyKind kind) {
  switch (kind) {
    case StragglerPolicyKind::None:
      return "none";
    case StragglerPolicyKind::FixedSet:
      return "fixed-set";
    case StragglerPolicyKind::SeededRandom:
      return "seeded-random";
    case StragglerPolicyKind::AdversarialPerGroup:
      return "adversarial-per-group";
  }
  throw ConfigError("invalid straggler policy kind");
}

StragglerPolicyKind policy_kind_from_string(const std::string& s) {
  if (s == "none") return StragglerPolicyKind::None;
  if (s == "fixed-set") return StragglerPolicyKind::FixedSet;
  if (s == "seeded-random") return StragglerPolicyKind::SeededRandom;
  if (s == "adversarial-per-group") return StragglerPolicyKind::AdversarialPerGroup;
  throw ConfigError("unknown straggler policy kind: " + s);
}

}  // namespace

StragglerGenerator make_straggler_policy(const StragglerPolicySpec& spec,
                                         int straggler_tolerance,
                                         std::uint64_t seed) {
  switch (spec.kind) {
    case StragglerPolicyKind::None:
      return [](int, const AvailabilityRealization&,
                const ComputationAssignment&) { return std::vector<int>{}; };
    case StragglerPolicyKind::FixedSet: {
      std::vector<int> fixed = spec.machines;
      std::sort(fixed.begin(), fixed.end());
      return [fixed](int, const AvailabilityRealization& realization,
                     const ComputationAssignment&) {
        std::vector<int> out;
        for (int machine : fixed) {
          if (realization.contains(machine)) out.push_back(machine);
        }
        return out;
      };
    }
    case StragglerPolicyKind::SeededRandom: {
      const int draw = spec.count;
      return [draw, seed](int step, const AvailabilityRealization& realization,
                          const ComputationAssignment&) {
        std::vector<int> pool = realization.members();
        std::mt19937_64 engine(step_seed(seed ^ 0x5eeded5eeded5eedull, step));
        std::vector<int> out;
        const int take = std::min<int>(draw, static_cast<int>(pool.size()));
        for (int i = 0; i < take; ++i) {
          const std::size_t pick =
              static_cast<std::size_t>(engine() % pool.size());
          out.push_back(pool[pick]);
          pool.erase(pool.begin() + static_cast<long>(pick));
        }
        std::sort(out.begin(), out.end());
        return out;
      };
    }
    case StragglerPolicyKind::AdversarialPerGroup: {
      const int budget = straggler_tolerance;
      return [budget, seed](int step, const AvailabilityRealization&,
                            const ComputationAssignment& assignment) {
        if (budget <= 0 || assignment.group_count() == 0) {
          return std::vector<int>{};
        }
        const int m = assignment.group_count();
        const int group =
            mod1(static_cast<long long>(step) + static_cast<long long>(seed % 1000003ull), m);
        const auto& members =
            assignment.groups[static_cast<std::size_t>(group - 1)];
        std::vector<int> out(
            members.begin(),
            members.begin() + std::min<std::size_t>(
                                  static_cast<std::size_t>(budget), members.size()));
        std::sort(out.begin(), out.end());
        return out;
      };
    }
  }
  throw ConfigError("invalid straggler policy kind");
}

std::vector<ScheduleStep> SimConfig::resolved_schedule() const {
  if (!schedule.empty()) return schedule;
  std::vector<ScheduleStep> out;
  out.reserve(static_cast<std::size_t>(steps));
  std::vector<int> everyone(static_cast<std::size_t>(params.machines));
  std::iota(everyone.begin(), everyone.end(), 1);
  const StragglerGenerator generate =
      make_straggler_policy(policy, params.straggler_tolerance, seed);
  for (int t = 1; t <= steps; ++t) {
    AvailabilityRealization realization(everyone);
    ComputationAssignment assignment = cyclic_assignment(
        realization, params.recovery_threshold, params.straggler_tolerance);
    out.push_back(ScheduleStep{everyone, generate(t, realization, assignment)});
  }
  return out;
}

void SimConfig::validate() const {
  params.validate();
  if (!is_prime_u64(modulus)) {
    throw ConfigError("modulus " + std::to_string(modulus) + " is not prime");
  }
  if (modulus < static_cast<std::uint64_t>(params.machines +
                                           params.recovery_threshold)) {
    throw ConfigError("field too small: need at least " +
                      std::to_string(params.machines +
                                     params.recovery_threshold) +
                      " distinct evaluation points");
  }
  if (shape.a_rows < 1 || shape.inner_dim < 1 || shape.b_cols < 1) {
    throw ConfigError("matrix dimensions must be positive");
  }
  if (schedule.empty() && steps < 1) {
    throw ConfigError("generated schedules need steps >= 1");
  }
  if (policy.kind == StragglerPolicyKind::SeededRandom && policy.count < 0) {
    throw ConfigError("seeded-random straggler count must be nonnegative");
  }

  const int min_size = params.min_realization_size();
  std::vector<int> sizes;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const ScheduleStep& step = schedule[i];
    const std::string where = "schedule step " + std::to_string(i + 1);
    if (step.available.empty()) throw ConfigError(where + ": empty realization");
    for (std::size_t j = 0; j < step.available.size(); ++j) {
      const int machine = step.available[j];
      if (machine < 1 || machine > params.machines) {
        throw ConfigError(where + ": machine label out of range");
      }
      if (j > 0 && step.available[j] <= step.available[j - 1]) {
        throw ConfigError(where + ": members must be strictly increasing");
      }
    }
    const int size = static_cast<int>(step.available.size());
    if (size < min_size) {
      throw ConfigError(where + ": realization size " + std::to_string(size) +
                        " below the supported minimum " +
                        std::to_string(min_size));
    }
    for (std::size_t j = 0; j < step.stragglers.size(); ++j) {
      if (j > 0 && step.stragglers[j] <= step.stragglers[j - 1]) {
        throw ConfigError(where + ": stragglers must be strictly increasing");
      }
      if (!std::binary_search(step.available.begin(), step.available.end(),
                              step.stragglers[j])) {
        throw ConfigError(where + ": straggler " +
                          std::to_string(step.stragglers[j]) +
                          " is not an available machine");
      }
    }
    sizes.push_back(size);
  }
  if (schedule.empty()) sizes.push_back(params.machines);

  try {
    for (int size : sizes) {
      validate_scheme_dims(scheme, shape, params.recovery_threshold, size);
    }
    if (placement == PlacementMode::UnionOverRealizations) {
      // The union content mixes granularities from every supported size, so
      // its slices must land on whole rows (resp. columns) for all of them.
      long granularity = 1;
      for (int size = min_size; size <= params.machines; ++size) {
        granularity = lcm_long(granularity, size);
      }
      if (scheme == SchemeId::Scheme2 &&
          (shape.a_rows / params.recovery_threshold) % granularity != 0) {
        throw ConfigError("union placement needs a_rows divisible by " +
                          std::to_string(params.recovery_threshold *
                                         granularity));
      }
      if (scheme == SchemeId::Scheme3 && shape.inner_dim % granularity != 0) {
        throw ConfigError("union placement needs inner_dim divisible by " +
                          std::to_string(granularity));
      }
    }
  } catch (const PartitionError& e) {
    throw ConfigError(e.what());
  }
}

namespace {

struct StorageState {
  // Union mode: full coded matrices, one per machine label.
  std::vector<FieldMatrix> coded_full;
  UnionStoragePlan union_plan;
  // Per-realization mode: the placement currently materialized.
  bool placed = false;
  std::vector<int> placed_members;
  PlacementResult placement;
};

MachineStorage union_storage_view(const SimConfig& config,
                                  const StorageState& state,
                                  const EvaluationPoints& points, int machine,
                                  const ComputationAssignment& assignment,
                                  int realization_size) {
  const IntervalUnion& stored =
      state.union_plan.per_machine[static_cast<std::size_t>(machine - 1)];
  const FieldMatrix& coded =
      state.coded_full[static_cast<std::size_t>(machine - 1)];
  MachineStorage view;
  view.machine = machine;
  if (config.scheme == SchemeId::Scheme1) {
    view.blocks.push_back(CodedBlock{machine, std::nullopt,
                                     points.alpha_for(machine), coded});
    return view;
  }
  const long extent = (config.scheme == SchemeId::Scheme2)
                          ? coded.rows() / realization_size
                          : coded.cols() / realization_size;
  for (int group : assignment.groups_of(machine)) {
    const Rational lo(group - 1, realization_size);
    const Rational hi(group, realization_size);
    if (!stored.covers(lo, hi)) {
      throw MissingStorage(machine, "slice [" + lo.str() + ", " + hi.str() +
                                        ") of its coded matrix");
    }
    FieldMatrix payload = (config.scheme == SchemeId::Scheme2)
                              ? coded.row_slice((group - 1) * extent,
                                                group * extent)
                              : coded.col_slice((group - 1) * extent,
                                                group * extent);
    view.blocks.push_back(CodedBlock{machine, group,
                                     points.alpha_for(machine),
                                     std::move(payload)});
  }
  return view;
}

}  // namespace

SimReport run_simulation(const SimConfig& config) {
  config.validate();

  SimReport report;
  report.config = config;
  report.config.schedule = config.resolved_schedule();
  const std::vector<ScheduleStep>& schedule = report.config.schedule;

  const PrimeField field(config.modulus);
  const int n = config.params.machines;
  const int l = config.params.recovery_threshold;
  const EvaluationPoints points = generate_points(field, n, l);
  const FieldMatrix data_a = random_matrix(field, config.shape.a_rows,
                                           config.shape.inner_dim, config.seed);
  const int threads = thread_cap_from_env();

  StorageState state;
  if (config.placement == PlacementMode::UnionOverRealizations) {
    state.union_plan = union_placement(
        config.scheme, n, config.params.preemption_tolerance, l,
        config.params.straggler_tolerance);
    const std::vector<FieldMatrix> row_parts =
        partition(data_a, Axis::RowWise, l);
    state.coded_full.reserve(static_cast<std::size_t>(n));
    for (int machine = 1; machine <= n; ++machine) {
      state.coded_full.push_back(
          encode_block(row_parts, points.betas, points.alpha_for(machine)));
    }
    // One-time placement ledger covering every machine.
    PlacementLedger ledger;
    ledger.step = 1;
    const long coded_rows = config.shape.a_rows / l;
    for (int machine = 1; machine <= n; ++machine) {
      const IntervalUnion& stored =
          state.union_plan.per_machine[static_cast<std::size_t>(machine - 1)];
      const Rational axis_extent(
          config.scheme == SchemeId::Scheme3 ? config.shape.inner_dim
                                             : coded_rows);
      const Rational other_extent(
          config.scheme == SchemeId::Scheme3 ? coded_rows
                                             : config.shape.inner_dim);
      const Rational symbols = stored.measure() * axis_extent * other_extent;
      if (!symbols.is_integer()) {
        throw ConfigError("union placement does not align with whole symbols");
      }
      ledger.machines.push_back(machine);
      ledger.storage_symbols.push_back(symbols.num());
      ledger.storage_normalized.push_back(stored.measure() / Rational(l));
      ledger.encoding_mults.push_back(symbols.num() * l);
    }
    report.placements.push_back(std::move(ledger));
  }

  for (int t = 1; t <= static_cast<int>(schedule.size()); ++t) {
    const ScheduleStep& scheduled = schedule[static_cast<std::size_t>(t - 1)];
    const AvailabilityRealization realization(scheduled.available);
    const int m = realization.size();
    const ComputationAssignment assignment = cyclic_assignment(
        realization, l, config.params.straggler_tolerance);

    if (config.placement == PlacementMode::PerRealization &&
        (!state.placed || state.placed_members != scheduled.available)) {
      state.placement = storage_plan(config.scheme, config.params, realization,
                                     points, data_a);
      state.placed = true;
      state.placed_members = scheduled.available;
      PlacementLedger ledger;
      ledger.step = t;
      for (int machine : scheduled.available) {
        ledger.machines.push_back(machine);
        ledger.storage_symbols.push_back(
            state.placement.plan.storage_symbols(machine));
        ledger.storage_normalized.push_back(
            state.placement.plan.normalized_size(machine));
        const std::size_t rank =
            static_cast<std::size_t>(realization.rank_of(machine) - 1);
        ledger.encoding_mults.push_back(
            state.placement.payloads[rank].encoding_mults);
      }
      report.placements.push_back(std::move(ledger));
    }

    const FieldMatrix input_b = random_matrix(
        field, config.shape.inner_dim, config.shape.b_cols,
        step_seed(config.seed, t));
    const DownloadResult downloads =
        download_plan(config.scheme, realization, assignment, input_b);

    StepRecord record;
    record.step = t;
    record.available = scheduled.available;
    record.stragglers = scheduled.stragglers;

    // Workers: stragglers do their assigned work but nothing arrives.
    std::vector<std::vector<ResultPoint>> per_rank(
        static_cast<std::size_t>(m));
    std::vector<long> compute_mults(static_cast<std::size_t>(m), 0);
    std::vector<int> active_ranks;
    for (int rank = 1; rank <= m; ++rank) {
      const int machine = realization.member(rank);
      if (!std::binary_search(scheduled.stragglers.begin(),
                              scheduled.stragglers.end(), machine)) {
        active_ranks.push_back(rank);
      }
    }
    std::exception_ptr worker_error;
    run_parallel(
        static_cast<int>(active_ranks.size()), threads, [&](int idx) {
          try {
            const int rank = active_ranks[static_cast<std::size_t>(idx)];
            const int machine = realization.member(rank);
            const MachineStorage storage =
                (config.placement == PlacementMode::UnionOverRealizations)
                    ? union_storage_view(config, state, points, machine,
                                         assignment, m)
                    : state.placement.payloads[static_cast<std::size_t>(rank - 1)];
            const MachineDownload& download =
                downloads.payloads[static_cast<std::size_t>(rank - 1)];
            per_rank[static_cast<std::size_t>(rank - 1)] = worker_compute(
                config.scheme, machine, storage, download, assignment);
          } catch (...) {
            if (!worker_error) worker_error = std::current_exception();
          }
        });
    if (worker_error) std::rethrow_exception(worker_error);

    // Assigned work per machine, stragglers included: one task per group
    // membership, each a full (left rows x inner x right cols) product.
    long left_rows = 0;
    long left_cols = 0;
    long right_cols = 0;
    switch (config.scheme) {
      case SchemeId::Scheme1:
        left_rows = config.shape.a_rows / l;
        left_cols = config.shape.inner_dim;
        right_cols = config.shape.b_cols / m;
        break;
      case SchemeId::Scheme2:
        left_rows = config.shape.a_rows / (static_cast<long>(l) * m);
        left_cols = config.shape.inner_dim;
        right_cols = config.shape.b_cols;
        break;
      case SchemeId::Scheme3:
        left_rows = config.shape.a_rows / l;
        left_cols = config.shape.inner_dim / m;
        right_cols = config.shape.b_cols;
        break;
    }
    const long task_mults = left_rows * left_cols * right_cols;
    for (int rank = 1; rank <= m; ++rank) {
      const int machine = realization.member(rank);
      const long tasks =
          static_cast<long>(assignment.groups_of(machine).size());
      compute_mults[static_cast<std::size_t>(rank - 1)] = tasks * task_mults;
    }

    std::vector<ResultPoint> results;
    for (const auto& slot : per_rank) {
      results.insert(results.end(), slot.begin(), slot.end());
    }

    FieldMatrix decoded(field, 0, 0);
    DecodeStats stats;
    try {
      decoded = master_decode(config.scheme, results, assignment, points,
                              config.shape, l, &stats);
      record.success = true;
      record.groups_decoded = m;
      record.decode_mults = stats.interpolation_mults;
    } catch (const DecodeThresholdNotMet& e) {
      record.success = false;
      record.failure = e.what();
      int decodable = 0;
      for (int group = 1; group <= m; ++group) {
        int arrived = 0;
        for (const ResultPoint& r : results) {
          if (r.group == group) ++arrived;
        }
        if (arrived >= l) ++decodable;
      }
      record.groups_decoded = decodable;
    }
    if (record.success) {
      const FieldMatrix oracle = reference_matmul(data_a, input_b);
      record.decoded_matches_oracle = (decoded == oracle);
    }
    record.stragglers_tolerated =
        static_cast<int>(scheduled.stragglers.size());

    // Ledger rows for every machine; preempted machines stay at zero.
    for (int machine = 1; machine <= n; ++machine) {
      MachineStepLedger row;
      row.machine = machine;
      if (realization.contains(machine)) {
        const int rank = realization.rank_of(machine);
        row.download_symbols =
            downloads.plan.download_symbols(machine, config.shape);
        row.compute_mults = compute_mults[static_cast<std::size_t>(rank - 1)];
        for (const ResultPoint& r :
             per_rank[static_cast<std::size_t>(rank - 1)]) {
          row.upload_symbols += r.payload.symbol_count();
        }
      }
      report.total_download_symbols += row.download_symbols;
      report.total_upload_symbols += row.upload_symbols;
      report.total_compute_mults += row.compute_mults;
      record.machines.push_back(row);
    }
    if (record.success) {
      ++report.steps_succeeded;
    } else {
      ++report.steps_failed;
    }
    report.steps.push_back(std::move(record));
  }
  return report;
}

namespace {

json policy_to_json(const StragglerPolicySpec& spec) {
  json out;
  out["kind"] = policy_kind_to_string(spec.kind);
  if (spec.kind == StragglerPolicyKind::FixedSet) out["machines"] = spec.machines;
  if (spec.kind == StragglerPolicyKind::SeededRandom) out["k"] = spec.count;
  return out;
}

json config_to_json_object(const SimConfig& config) {
  json out;
  out["n"] = config.params.machines;
  out["l"] = config.params.recovery_threshold;
  out["s"] = config.params.straggler_tolerance;
  out["u"] = config.params.preemption_tolerance;
  out["scheme"] = scheme_to_string(config.scheme);
  out["p"] = config.modulus;
  out["q"] = config.shape.a_rows;
  out["v"] = config.shape.inner_dim;
  out["r"] = config.shape.b_cols;
  out["seed"] = config.seed;
  out["placement"] = placement_to_string(config.placement);
  out["straggler_policy"] = policy_to_json(config.policy);
  json schedule = json::array();
  for (const ScheduleStep& step : config.schedule) {
    schedule.push_back(
        json{{"available", step.available}, {"stragglers", step.stragglers}});
  }
  out["schedule"] = schedule;
  return out;
}

}  // namespace

SimConfig parse_sim_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  try {
    SimConfig config;
    config.params.machines = doc.at("n").get<int>();
    config.params.recovery_threshold = doc.at("l").get<int>();
    config.params.straggler_tolerance = doc.at("s").get<int>();
    config.params.preemption_tolerance = doc.at("u").get<int>();
    config.scheme = scheme_from_string(doc.at("scheme").get<std::string>());
    config.modulus = doc.at("p").get<std::uint64_t>();
    config.shape.a_rows = doc.at("q").get<long>();
    config.shape.inner_dim = doc.at("v").get<long>();
    config.shape.b_cols = doc.at("r").get<long>();
    config.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("placement")) {
      config.placement =
          placement_from_string(doc.at("placement").get<std::string>());
    }
    if (doc.contains("schedule")) {
      for (const json& entry : doc.at("schedule")) {
        ScheduleStep step;
        step.available = entry.at("available").get<std::vector<int>>();
        if (entry.contains("stragglers")) {
          step.stragglers = entry.at("stragglers").get<std::vector<int>>();
        }
        config.schedule.push_back(std::move(step));
      }
    }
    if (doc.contains("steps")) config.steps = doc.at("steps").get<int>();
    if (doc.contains("straggler_policy")) {
      const json& policy = doc.at("straggler_policy");
      config.policy.kind =
          policy_kind_from_string(policy.at("kind").get<std::string>());
      if (config.policy.kind == StragglerPolicyKind::FixedSet) {
        config.policy.machines =
            policy.at("machines").get<std::vector<int>>();
      }
      if (config.policy.kind == StragglerPolicyKind::SeededRandom) {
        config.policy.count = policy.at("k").get<int>();
      }
    }
    return config;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config document: ") + e.what());
  } catch (const UnknownScheme& e) {
    throw ConfigError(e.what());
  }
}

std::string sim_config_to_json(const SimConfig& config) {
  return config_to_json_object(config).dump(2) + "\n";
}

std::string sim_report_to_json(const SimReport& report) {
  json out;
  out["config"] = config_to_json_object(report.config);

  json placements = json::array();
  for (const PlacementLedger& ledger : report.placements) {
    json machines = json::array();
    for (std::size_t i = 0; i < ledger.machines.size(); ++i) {
      machines.push_back(json{
          {"machine", ledger.machines[i]},
          {"storage_symbols", ledger.storage_symbols[i]},
          {"storage_normalized", ledger.storage_normalized[i].str()},
          {"encoding_mults", ledger.encoding_mults[i]},
      });
    }
    placements.push_back(json{{"step", ledger.step}, {"machines", machines}});
  }
  out["placements"] = placements;

  json steps = json::array();
  for (const StepRecord& record : report.steps) {
    json machines = json::array();
    for (const MachineStepLedger& row : record.machines) {
      machines.push_back(json{
          {"machine", row.machine},
          {"download_symbols", row.download_symbols},
          {"upload_symbols", row.upload_symbols},
          {"compute_mults", row.compute_mults},
      });
    }
    steps.push_back(json{
        {"step", record.step},
        {"available", record.available},
        {"stragglers", record.stragglers},
        {"success", record.success},
        {"decoded_matches_oracle", record.decoded_matches_oracle},
        {"groups_decoded", record.groups_decoded},
        {"stragglers_tolerated", record.stragglers_tolerated},
        {"decode_mults", record.decode_mults},
        {"failure", record.failure},
        {"machines", machines},
    });
  }
  out["steps"] = steps;

  out["totals"] = json{
      {"download_symbols", report.total_download_symbols},
      {"upload_symbols", report.total_upload_symbols},
      {"compute_mults", report.total_compute_mults},
      {"steps_succeeded", report.steps_succeeded},
      {"steps_failed", report.steps_failed},
  };
  return out.dump(2) + "\n";
}

std::string sim_report_to_csv(const SimReport& report) {
  std::ostringstream out;
  out << "step,machine,download_symbols,upload_symbols,compute_mults,success\n";
  for (const StepRecord& record : report.steps) {
    for (const MachineStepLedger& row : record.machines) {
      out << record.step << "," << row.machine << "," << row.download_symbols
          << "," << row.upload_symbols << "," << row.compute_mults << ","
          << (record.success ? 1 : 0) << "\n";
    }
  }
  return out.str();
}

}  // namespace lcsud
