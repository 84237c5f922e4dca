#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "lcsud/costs.hpp"
#include "lcsud/schemes.hpp"

using namespace lcsud;

namespace {

const SystemParams kExampleParams{6, 2, 1, 0};

struct RoundFixture {
  PrimeField field;
  EvaluationPoints points;
  AvailabilityRealization realization;
  ComputationAssignment assignment;
  FieldMatrix data_a;
  FieldMatrix input_b;
  ProblemShape shape;
};

RoundFixture make_fixture(SchemeId scheme, std::uint64_t seed,
                          std::vector<int> members = {1, 2, 3, 4, 5, 6},
                          long q = 12, long v = 12, long r = 12) {
  (void)scheme;
  PrimeField field(65537);
  EvaluationPoints points = generate_points(field, kExampleParams.machines,
                                            kExampleParams.recovery_threshold);
  AvailabilityRealization realization(std::move(members));
  ComputationAssignment assignment =
      cyclic_assignment(realization, kExampleParams.recovery_threshold,
                        kExampleParams.straggler_tolerance);
  FieldMatrix data_a = random_matrix(field, q, v, seed);
  FieldMatrix input_b = random_matrix(field, v, r, seed + 1);
  return RoundFixture{std::move(field),  std::move(points),
                      std::move(realization), std::move(assignment),
                      std::move(data_a), std::move(input_b),
                      ProblemShape{q, v, r}};
}

std::vector<ResultPoint> run_workers(SchemeId scheme, const RoundFixture& fx,
                                     const PlacementResult& placement,
                                     const DownloadResult& downloads,
                                     const std::vector<int>& skip = {}) {
  std::vector<ResultPoint> results;
  for (int rank = 1; rank <= fx.realization.size(); ++rank) {
    const int machine = fx.realization.member(rank);
    if (std::find(skip.begin(), skip.end(), machine) != skip.end()) continue;
    const auto mine = worker_compute(
        scheme, machine, placement.payloads[static_cast<std::size_t>(rank - 1)],
        downloads.payloads[static_cast<std::size_t>(rank - 1)], fx.assignment);
    results.insert(results.end(), mine.begin(), mine.end());
  }
  return results;
}

}  // namespace

TEST_CASE("scheme id parsing") {
  CHECK(scheme_from_string("1") == SchemeId::Scheme1);
  CHECK(scheme_from_string("3") == SchemeId::Scheme3);
  CHECK_THROWS_AS(scheme_from_string("4"), UnknownScheme);
}

TEST_CASE("storage plans match the six-machine fixtures") {
  SUBCASE("scheme 1 stores half of A per machine") {
    const RoundFixture fx = make_fixture(SchemeId::Scheme1, 100);
    const PlacementResult placement = storage_plan(
        SchemeId::Scheme1, kExampleParams, fx.realization, fx.points, fx.data_a);
    for (int machine = 1; machine <= 6; ++machine) {
      CHECK(placement.plan.normalized_size(machine) == Rational(1, 2));
      CHECK(placement.plan.storage_symbols(machine) == 72);
      const auto& units =
          placement.plan.units[static_cast<std::size_t>(machine - 1)];
      REQUIRE(units.size() == 1);
      CHECK_FALSE(units[0].group.has_value());
      CHECK(units[0].begin == 0);
      CHECK(units[0].end == 6);  // all q/L rows
    }
  }
  SUBCASE("scheme 2 stores a quarter of A as three thin blocks") {
    const RoundFixture fx = make_fixture(SchemeId::Scheme2, 101);
    const PlacementResult placement = storage_plan(
        SchemeId::Scheme2, kExampleParams, fx.realization, fx.points, fx.data_a);
    for (int machine = 1; machine <= 6; ++machine) {
      CHECK(placement.plan.normalized_size(machine) == Rational(1, 4));
      const auto& blocks =
          placement.payloads[static_cast<std::size_t>(machine - 1)].blocks;
      REQUIRE(blocks.size() == 3);  // L+S coded matrices
      for (const CodedBlock& block : blocks) {
        CHECK(block.payload.rows() == 1);   // q/(L*m) = 12/12
        CHECK(block.payload.cols() == 12);  // v
      }
    }
  }
  SUBCASE("scheme 3 stores a quarter of A as three column slices") {
    const RoundFixture fx = make_fixture(SchemeId::Scheme3, 102);
    const PlacementResult placement = storage_plan(
        SchemeId::Scheme3, kExampleParams, fx.realization, fx.points, fx.data_a);
    for (int machine = 1; machine <= 6; ++machine) {
      CHECK(placement.plan.normalized_size(machine) == Rational(1, 4));
      const auto& blocks =
          placement.payloads[static_cast<std::size_t>(machine - 1)].blocks;
      REQUIRE(blocks.size() == 3);
      for (const CodedBlock& block : blocks) {
        CHECK(block.payload.rows() == 6);  // q/L
        CHECK(block.payload.cols() == 2);  // v/m
      }
    }
  }
  SUBCASE("divisibility violations") {
    const RoundFixture fx = make_fixture(SchemeId::Scheme2, 103);
    const FieldMatrix odd_a = random_matrix(fx.field, 10, 12, 5);
    CHECK_THROWS_AS(storage_plan(SchemeId::Scheme2, kExampleParams,
                                 fx.realization, fx.points, odd_a),
                    PartitionError);
  }
}

TEST_CASE("stored slices are slices of the full coded matrix") {
  const RoundFixture fx = make_fixture(SchemeId::Scheme2, 200);
  const std::vector<FieldMatrix> row_parts =
      partition(fx.data_a, Axis::RowWise, 2);
  for (int machine = 1; machine <= 6; ++machine) {
    const FieldMatrix coded_full =
        encode_block(row_parts, fx.points.betas, fx.points.alpha_for(machine));

    const PlacementResult p2 = storage_plan(
        SchemeId::Scheme2, kExampleParams, fx.realization, fx.points, fx.data_a);
    const auto& blocks2 =
        p2.payloads[static_cast<std::size_t>(machine - 1)].blocks;
    const auto& units2 = p2.plan.units[static_cast<std::size_t>(machine - 1)];
    for (std::size_t i = 0; i < blocks2.size(); ++i) {
      CHECK(blocks2[i].payload ==
            coded_full.row_slice(units2[i].begin, units2[i].end));
    }

    const PlacementResult p3 = storage_plan(
        SchemeId::Scheme3, kExampleParams, fx.realization, fx.points, fx.data_a);
    const auto& blocks3 =
        p3.payloads[static_cast<std::size_t>(machine - 1)].blocks;
    const auto& units3 = p3.plan.units[static_cast<std::size_t>(machine - 1)];
    for (std::size_t i = 0; i < blocks3.size(); ++i) {
      CHECK(blocks3[i].payload ==
            coded_full.col_slice(units3[i].begin, units3[i].end));
    }
  }
}

TEST_CASE("download plans") {
  SUBCASE("scheme 1 ships the blocks of the machine's groups") {
    const RoundFixture fx = make_fixture(SchemeId::Scheme1, 300);
    const DownloadResult downloads = download_plan(
        SchemeId::Scheme1, fx.realization, fx.assignment, fx.input_b);
    CHECK((downloads.plan.block_groups[0] == std::vector<int>{1, 5, 6}));
    CHECK((downloads.plan.block_groups[1] == std::vector<int>{1, 2, 6}));
    CHECK((downloads.plan.block_groups[2] == std::vector<int>{1, 2, 3}));
    CHECK((downloads.plan.block_groups[3] == std::vector<int>{2, 3, 4}));
    CHECK((downloads.plan.block_groups[4] == std::vector<int>{3, 4, 5}));
    CHECK((downloads.plan.block_groups[5] == std::vector<int>{4, 5, 6}));
    // vr/2 symbols each: 12*12*3/6.
    for (int machine = 1; machine <= 6; ++machine) {
      CHECK(downloads.plan.download_symbols(machine, fx.shape) == 72);
    }
    // Delivered payloads are the actual column blocks.
    const auto b_blocks = partition(fx.input_b, Axis::ColumnWise, 6);
    for (const auto& [group, payload] : downloads.payloads[0].blocks) {
      CHECK(payload == b_blocks[static_cast<std::size_t>(group - 1)]);
    }
  }
  SUBCASE("scheme 2 ships the whole input everywhere") {
    const RoundFixture fx = make_fixture(SchemeId::Scheme2, 301);
    const DownloadResult downloads = download_plan(
        SchemeId::Scheme2, fx.realization, fx.assignment, fx.input_b);
    for (int rank = 0; rank < 6; ++rank) {
      CHECK(downloads.plan.entire_b[static_cast<std::size_t>(rank)]);
      REQUIRE(downloads.payloads[static_cast<std::size_t>(rank)].blocks.size() == 1);
      CHECK(downloads.payloads[static_cast<std::size_t>(rank)].blocks[0].second ==
            fx.input_b);
      CHECK(downloads.plan.download_symbols(rank + 1, fx.shape) == 144);
    }
  }
  SUBCASE("width equal to the realization downloads everything (schemes 1 and 3)") {
    PrimeField field(65537);
    const AvailabilityRealization r3({1, 2, 3});
    const ComputationAssignment a3 = cyclic_assignment(r3, 2, 1);
    const FieldMatrix b = random_matrix(field, 12, 12, 9);
    for (SchemeId scheme : {SchemeId::Scheme1, SchemeId::Scheme3}) {
      const DownloadResult downloads = download_plan(scheme, r3, a3, b);
      for (int rank = 0; rank < 3; ++rank) {
        CHECK((downloads.plan.block_groups[static_cast<std::size_t>(rank)] == std::vector<int>{1, 2, 3}));
        CHECK(downloads.plan.download_symbols(rank + 1,
                                              ProblemShape{12, 12, 12}) == 144);
      }
    }
  }
}

TEST_CASE("worker results are evaluations of the group polynomials") {
  for (SchemeId scheme :
       {SchemeId::Scheme1, SchemeId::Scheme2, SchemeId::Scheme3}) {
    CAPTURE(static_cast<int>(scheme));
    const RoundFixture fx = make_fixture(scheme, 400);
    const PlacementResult placement =
        storage_plan(scheme, kExampleParams, fx.realization, fx.points, fx.data_a);
    const DownloadResult downloads =
        download_plan(scheme, fx.realization, fx.assignment, fx.input_b);

    const std::vector<FieldMatrix> row_parts =
        partition(fx.data_a, Axis::RowWise, 2);

    for (int machine = 1; machine <= 6; ++machine) {
      const std::size_t rank =
          static_cast<std::size_t>(fx.realization.rank_of(machine) - 1);
      const auto results =
          worker_compute(scheme, machine, placement.payloads[rank],
                         downloads.payloads[rank], fx.assignment);
      CHECK(results.size() == 3);  // L+S groups per machine

      for (const ResultPoint& result : results) {
        // Expected value: encode the products (A-part * B-part) of this
        // group at the machine's point; multiplication commutes with the
        // linear encoding.
        std::vector<FieldMatrix> products;
        for (const FieldMatrix& part : row_parts) {
          switch (scheme) {
            case SchemeId::Scheme1: {
              const auto b_blocks = partition(fx.input_b, Axis::ColumnWise, 6);
              products.push_back(reference_matmul(
                  part, b_blocks[static_cast<std::size_t>(result.group - 1)]));
              break;
            }
            case SchemeId::Scheme2: {
              const auto sub_parts = partition(part, Axis::RowWise, 6);
              products.push_back(reference_matmul(
                  sub_parts[static_cast<std::size_t>(result.group - 1)],
                  fx.input_b));
              break;
            }
            case SchemeId::Scheme3: {
              const auto sub_parts = partition(part, Axis::ColumnWise, 6);
              const auto b_blocks = partition(fx.input_b, Axis::RowWise, 6);
              products.push_back(reference_matmul(
                  sub_parts[static_cast<std::size_t>(result.group - 1)],
                  b_blocks[static_cast<std::size_t>(result.group - 1)]));
              break;
            }
          }
        }
        CHECK(result.payload == encode_block(products, fx.points.betas,
                                             fx.points.alpha_for(machine)));
      }

      // Result shapes per scheme at q=v=r=12, m=6.
      const long rows = results.front().payload.rows();
      const long cols = results.front().payload.cols();
      if (scheme == SchemeId::Scheme1) CHECK((rows == 6 && cols == 2));
      if (scheme == SchemeId::Scheme2) CHECK((rows == 1 && cols == 12));
      if (scheme == SchemeId::Scheme3) CHECK((rows == 6 && cols == 12));
    }
  }
}

TEST_CASE("worker rejects missing payloads") {
  const RoundFixture fx = make_fixture(SchemeId::Scheme1, 401);
  const PlacementResult placement = storage_plan(
      SchemeId::Scheme1, kExampleParams, fx.realization, fx.points, fx.data_a);
  const DownloadResult downloads = download_plan(
      SchemeId::Scheme1, fx.realization, fx.assignment, fx.input_b);
  MachineDownload incomplete = downloads.payloads[0];
  incomplete.blocks.pop_back();
  CHECK_THROWS_AS(worker_compute(SchemeId::Scheme1, 1, placement.payloads[0],
                                 incomplete, fx.assignment),
                  IncompleteInputs);
  CHECK_THROWS_AS(worker_compute(SchemeId::Scheme1, 2, placement.payloads[0],
                                 downloads.payloads[0], fx.assignment),
                  IncompleteInputs);
}

TEST_CASE("master decode") {
  for (SchemeId scheme :
       {SchemeId::Scheme1, SchemeId::Scheme2, SchemeId::Scheme3}) {
    CAPTURE(static_cast<int>(scheme));
    const RoundFixture fx = make_fixture(scheme, 500);
    const PlacementResult placement =
        storage_plan(scheme, kExampleParams, fx.realization, fx.points, fx.data_a);
    const DownloadResult downloads =
        download_plan(scheme, fx.realization, fx.assignment, fx.input_b);
    const FieldMatrix oracle = reference_matmul(fx.data_a, fx.input_b);

    SUBCASE("full results decode to the exact product") {
      const auto results = run_workers(scheme, fx, placement, downloads);
      CHECK(master_decode(scheme, results, fx.assignment, fx.points, fx.shape,
                          2) == oracle);
    }
    SUBCASE("one straggler is tolerated") {
      const auto results = run_workers(scheme, fx, placement, downloads, {3});
      CHECK(master_decode(scheme, results, fx.assignment, fx.points, fx.shape,
                          2) == oracle);
    }
    SUBCASE("two missing results in one group exceed the tolerance") {
      auto results = run_workers(scheme, fx, placement, downloads);
      // Drop two of group 1's three results.
      int dropped = 0;
      results.erase(std::remove_if(results.begin(), results.end(),
                                   [&](const ResultPoint& r) {
                                     if (r.group == 1 && dropped < 2) {
                                       ++dropped;
                                       return true;
                                     }
                                     return false;
                                   }),
                    results.end());
      try {
        master_decode(scheme, results, fx.assignment, fx.points, fx.shape, 2);
        FAIL("expected DecodeThresholdNotMet");
      } catch (const DecodeThresholdNotMet& e) {
        CHECK(e.group() == 1);
      }
    }
    SUBCASE("exactly L results per group suffice") {
      auto results = run_workers(scheme, fx, placement, downloads);
      // Keep only the two lowest-labelled machines of every group.
      std::vector<ResultPoint> trimmed;
      for (int group = 1; group <= 6; ++group) {
        std::vector<const ResultPoint*> of_group;
        for (const ResultPoint& r : results) {
          if (r.group == group) of_group.push_back(&r);
        }
        std::sort(of_group.begin(), of_group.end(),
                  [](const ResultPoint* a, const ResultPoint* b) {
                    return a->machine < b->machine;
                  });
        trimmed.push_back(*of_group[0]);
        trimmed.push_back(*of_group[1]);
      }
      CHECK(master_decode(scheme, trimmed, fx.assignment, fx.points, fx.shape,
                          2) == oracle);
    }
  }
}

TEST_CASE("decode works on sparse machine labels") {
  const SystemParams params{9, 2, 1, 0};
  PrimeField field(65537);
  const EvaluationPoints points = generate_points(field, 9, 2);
  const AvailabilityRealization realization({2, 4, 5, 7, 8, 9});
  const ComputationAssignment assignment = cyclic_assignment(realization, 2, 1);
  const FieldMatrix data_a = random_matrix(field, 12, 12, 600);
  const FieldMatrix input_b = random_matrix(field, 12, 12, 601);
  for (SchemeId scheme :
       {SchemeId::Scheme1, SchemeId::Scheme2, SchemeId::Scheme3}) {
    const PlacementResult placement =
        storage_plan(scheme, params, realization, points, data_a);
    const DownloadResult downloads =
        download_plan(scheme, realization, assignment, input_b);
    std::vector<ResultPoint> results;
    for (int rank = 1; rank <= realization.size(); ++rank) {
      const auto mine = worker_compute(
          scheme, realization.member(rank),
          placement.payloads[static_cast<std::size_t>(rank - 1)],
          downloads.payloads[static_cast<std::size_t>(rank - 1)], assignment);
      results.insert(results.end(), mine.begin(), mine.end());
    }
    CHECK(master_decode(scheme, results, assignment, points,
                        ProblemShape{12, 12, 12}, 2) ==
          reference_matmul(data_a, input_b));
  }
}

TEST_CASE("end-to-end exactness under adversarial stragglers") {
  std::mt19937_64 rng(4242);
  for (SchemeId scheme :
       {SchemeId::Scheme1, SchemeId::Scheme2, SchemeId::Scheme3}) {
    for (int trial = 0; trial < 100; ++trial) {
      const RoundFixture fx = make_fixture(scheme, rng());
      const PlacementResult placement = storage_plan(
          scheme, kExampleParams, fx.realization, fx.points, fx.data_a);
      const DownloadResult downloads =
          download_plan(scheme, fx.realization, fx.assignment, fx.input_b);
      // Adversarial: concentrate the straggler in one group per trial.
      const int group = 1 + static_cast<int>(rng() % 6);
      const int straggler =
          fx.assignment.groups[static_cast<std::size_t>(group - 1)]
                             [rng() % 3];
      const auto results =
          run_workers(scheme, fx, placement, downloads, {straggler});
      const FieldMatrix decoded = master_decode(scheme, results, fx.assignment,
                                                fx.points, fx.shape, 2);
      REQUIRE(decoded == reference_matmul(fx.data_a, fx.input_b));
    }
  }
}

TEST_CASE("measured costs equal the analytic row") {
  for (SchemeId scheme :
       {SchemeId::Scheme1, SchemeId::Scheme2, SchemeId::Scheme3}) {
    CAPTURE(static_cast<int>(scheme));
    const RoundFixture fx = make_fixture(scheme, 700);
    const PlacementResult placement =
        storage_plan(scheme, kExampleParams, fx.realization, fx.points, fx.data_a);
    const DownloadResult downloads =
        download_plan(scheme, fx.realization, fx.assignment, fx.input_b);
    const CostReport row =
        cost_row(cost_model_from_string(scheme_to_string(scheme)), 6, 2, 1, 12,
                 12, 12);
    DecodeStats stats;
    std::vector<ResultPoint> results;
    for (int machine = 1; machine <= 6; ++machine) {
      const std::size_t rank =
          static_cast<std::size_t>(fx.realization.rank_of(machine) - 1);
      CHECK(placement.plan.normalized_size(machine) == row.storage_size);
      CHECK(Rational(placement.payloads[rank].encoding_mults) == row.encoding);
      CHECK(Rational(downloads.plan.download_symbols(machine, fx.shape)) ==
            row.download);
      const auto mine =
          worker_compute(scheme, machine, placement.payloads[rank],
                         downloads.payloads[rank], fx.assignment);
      long upload = 0;
      for (const ResultPoint& r : mine) upload += r.payload.symbol_count();
      CHECK(Rational(upload) == row.upload);
      results.insert(results.end(), mine.begin(), mine.end());
    }
    master_decode(scheme, results, fx.assignment, fx.points, fx.shape, 2,
                  &stats);
    CHECK(Rational(stats.interpolation_mults) == row.decoding);
  }
}
