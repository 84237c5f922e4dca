#include "lcsud/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lcsud/costs.hpp"
#include "lcsud/sim.hpp"

namespace lcsud {

namespace {

int run_simulate(const std::string& config_path, const std::string& out_path,
                 const std::string& ledger_path, std::ostream& out,
                 std::ostream& err) {
  std::ifstream config_file(config_path);
  if (!config_file) {
    err << "cannot open config file: " << config_path << "\n";
    return 1;
  }
  std::ostringstream buffer;
  buffer << config_file.rdbuf();

  SimConfig config;
  SimReport report;
  try {
    config = parse_sim_config(buffer.str());
    config.validate();
    err << "# simulate: " << config_path << " resolved to n="
        << config.params.machines << " l=" << config.params.recovery_threshold
        << " s=" << config.params.straggler_tolerance << " u="
        << config.params.preemption_tolerance << " scheme="
        << scheme_to_string(config.scheme) << " placement="
        << placement_to_string(config.placement) << " steps="
        << config.resolved_schedule().size() << "\n";
    report = run_simulation(config);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }

  const std::string rendered = sim_report_to_json(report);
  if (out_path.empty()) {
    out << rendered;
  } else {
    std::ofstream out_file(out_path);
    if (!out_file) {
      err << "cannot write report file: " << out_path << "\n";
      return 1;
    }
    out_file << rendered;
  }
  if (!ledger_path.empty()) {
    std::ofstream ledger_file(ledger_path);
    if (!ledger_file) {
      err << "cannot write ledger file: " << ledger_path << "\n";
      return 1;
    }
    ledger_file << sim_report_to_csv(report);
  }
  return report.all_success() ? 0 : 2;
}

int run_costs(int m, int l, int s, long q, long v, long r, std::ostream& out,
              std::ostream& err) {
  out << "# costs: m=" << m << " l=" << l << " s=" << s << " q=" << q
      << " v=" << v << " r=" << r << "\n";
  std::vector<CostReport> rows;
  try {
    for (CostModelId id : all_cost_models()) {
      rows.push_back(cost_row(id, m, l, s, q, v, r));
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }
  write_cost_table_csv(out, rows);
  return 0;
}

int run_fig2(int n, int l, int s, int umax, std::ostream& out,
             std::ostream& err) {
  out << "# fig2: n=" << n << " l=" << l << " s=" << s << " umax=" << umax
      << "\n";
  try {
    write_storage_curves_csv(out, storage_size_curves(n, l, s, umax));
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 0;
}

void print_group_lines(std::ostream& out, const ComputationAssignment& groups) {
  for (int g = 1; g <= groups.group_count(); ++g) {
    out << "W_" << g << " = {";
    const auto& members = groups.groups[static_cast<std::size_t>(g - 1)];
    for (std::size_t i = 0; i < members.size(); ++i) {
      out << (i ? ", " : "") << members[i];
    }
    out << "}\n";
  }
}

int run_demo(int example, long q, long v, long r, std::uint64_t p,
             std::uint64_t seed, std::ostream& out, std::ostream& err) {
  try {
    const SystemParams params{6, 2, 1, 0};
    const SchemeId scheme = scheme_from_string(std::to_string(example));
    out << "# demo example " << example << ": scheme " << example
        << ", n=6 l=2 s=1 u=0, p=" << p << ", q=" << q << " v=" << v
        << " r=" << r << ", seed=" << seed << "\n";

    const PrimeField field(p);
    const EvaluationPoints points =
        generate_points(field, params.machines, params.recovery_threshold);
    out << "evaluation points: beta = (";
    for (std::size_t i = 0; i < points.betas.size(); ++i) {
      out << (i ? ", " : "") << points.betas[i].value();
    }
    out << "), alpha = (";
    for (std::size_t i = 0; i < points.alphas.size(); ++i) {
      out << (i ? ", " : "") << points.alphas[i].value();
    }
    out << ")\n";

    std::vector<int> everyone = {1, 2, 3, 4, 5, 6};
    const AvailabilityRealization realization(everyone);
    const ComputationAssignment assignment = cyclic_assignment(
        realization, params.recovery_threshold, params.straggler_tolerance);
    out << "computation assignment (groups of width "
        << assignment.group_width << "):\n";
    print_group_lines(out, assignment);

    const FieldMatrix data_a = random_matrix(field, q, v, seed);
    const FieldMatrix input_b = random_matrix(field, v, r, step_seed(seed, 1));
    const ProblemShape shape{q, v, r};

    const PlacementResult placement =
        storage_plan(scheme, params, realization, points, data_a);
    out << "storage placement:\n";
    for (int machine : everyone) {
      const std::size_t rank =
          static_cast<std::size_t>(realization.rank_of(machine) - 1);
      out << "machine " << machine << " stores "
          << placement.payloads[rank].blocks.size() << " coded block(s), "
          << placement.plan.storage_symbols(machine)
          << " symbols, normalized "
          << placement.plan.normalized_size(machine).str() << "\n";
    }

    const DownloadResult downloads =
        download_plan(scheme, realization, assignment, input_b);
    out << "download plan:\n";
    for (int machine : everyone) {
      if (scheme == SchemeId::Scheme2) {
        out << "machine " << machine << " downloads the entire B ("
            << downloads.plan.download_symbols(machine, shape)
            << " symbols)\n";
        continue;
      }
      out << "machine " << machine << " downloads B_g for g in {";
      const auto& groups = downloads.plan.block_groups[static_cast<std::size_t>(
          realization.rank_of(machine) - 1)];
      for (std::size_t i = 0; i < groups.size(); ++i) {
        out << (i ? ", " : "") << groups[i];
      }
      out << "} (" << downloads.plan.download_symbols(machine, shape)
          << " symbols)\n";
    }

    std::vector<ResultPoint> results;
    out << "computing:\n";
    for (int machine : everyone) {
      const std::size_t rank =
          static_cast<std::size_t>(realization.rank_of(machine) - 1);
      std::vector<ResultPoint> mine =
          worker_compute(scheme, machine, placement.payloads[rank],
                         downloads.payloads[rank], assignment);
      out << "machine " << machine << " computes " << mine.size()
          << " result(s) of shape " << mine.front().payload.rows() << " x "
          << mine.front().payload.cols() << "\n";
      results.insert(results.end(), mine.begin(), mine.end());
    }

    out << "decoding: every group decodes from its "
        << params.recovery_threshold << " lowest-indexed results\n";
    const FieldMatrix decoded =
        master_decode(scheme, results, assignment, points, shape,
                      params.recovery_threshold);
    const FieldMatrix oracle = reference_matmul(data_a, input_b);
    const bool exact = (decoded == oracle);
    out << "decoded == A·B: " << (exact ? "true" : "false") << "\n";

    // One straggler: drop everything machine 3 produced and decode again.
    std::vector<ResultPoint> reduced;
    for (const ResultPoint& point : results) {
      if (point.machine != 3) reduced.push_back(point);
    }
    const FieldMatrix decoded_reduced =
        master_decode(scheme, reduced, assignment, points, shape,
                      params.recovery_threshold);
    const bool exact_reduced = (decoded_reduced == oracle);
    out << "decoded == A·B with machine 3 straggling: "
        << (exact_reduced ? "true" : "false") << "\n";
    return (exact && exact_reduced) ? 0 : 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Elastic coded matrix multiplication: simulator and cost tables"};
  app.require_subcommand(1);

  auto* simulate = app.add_subcommand("simulate", "Run a simulation config");
  std::string config_path;
  std::string out_path;
  std::string ledger_path;
  simulate->add_option("--config", config_path, "JSON configuration file")
      ->required();
  simulate->add_option("--out", out_path, "Report output file (default: stdout)");
  simulate->add_option("--ledger", ledger_path, "Per-machine CSV ledger file");

  auto* costs = app.add_subcommand("costs", "Print the per-machine cost table");
  int cost_m = 0;
  int cost_l = 0;
  int cost_s = 0;
  long cost_q = 0;
  long cost_v = 0;
  long cost_r = 0;
  costs->add_option("--n", cost_m, "Available machines this step")->required();
  costs->add_option("--l", cost_l, "Recovery threshold")->required();
  costs->add_option("--s", cost_s, "Straggler tolerance")->required();
  costs->add_option("--q", cost_q, "Rows of A")->required();
  costs->add_option("--v", cost_v, "Columns of A / rows of B")->required();
  costs->add_option("--r", cost_r, "Columns of B")->required();

  auto* fig2 = app.add_subcommand("fig2", "Print system storage-size curves");
  int fig_n = 20;
  int fig_l = 5;
  int fig_s = 0;
  int fig_umax = 15;
  fig2->add_option("--n", fig_n, "Total machines");
  fig2->add_option("--l", fig_l, "Recovery threshold");
  fig2->add_option("--s", fig_s, "Straggler tolerance");
  fig2->add_option("--umax", fig_umax, "Largest preemption budget");

  auto* demo = app.add_subcommand("demo", "Run a worked six-machine example");
  int example = 1;
  long demo_q = 12;
  long demo_v = 12;
  long demo_r = 12;
  std::uint64_t demo_p = kDefaultModulus;
  std::uint64_t demo_seed = 7;
  demo->add_option("--example", example, "Scheme to demonstrate (1, 2 or 3)")
      ->required()
      ->check(CLI::Range(1, 3));
  demo->add_option("--q", demo_q, "Rows of A");
  demo->add_option("--v", demo_v, "Columns of A / rows of B");
  demo->add_option("--r", demo_r, "Columns of B");
  demo->add_option("--p", demo_p, "Field modulus");
  demo->add_option("--seed", demo_seed, "Input seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  if (simulate->parsed()) {
    return run_simulate(config_path, out_path, ledger_path, out, err);
  }
  if (costs->parsed()) {
    return run_costs(cost_m, cost_l, cost_s, cost_q, cost_v, cost_r, out, err);
  }
  if (fig2->parsed()) {
    return run_fig2(fig_n, fig_l, fig_s, fig_umax, out, err);
  }
  if (demo->parsed()) {
    return run_demo(example, demo_q, demo_v, demo_r, demo_p, demo_seed, out,
                    err);
  }
  err << "no subcommand selected\n";
  return 1;
}

}  // namespace lcsud
