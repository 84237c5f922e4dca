#include "lcsud/schemes.hpp"

#include <algorithm>
#include <map>

namespace lcsud {

SchemeId scheme_from_string(const std::string& id) {
  if (id == "1") return SchemeId::Scheme1;
  if (id == "2") return SchemeId::Scheme2;
  if (id == "3") return SchemeId::Scheme3;
  throw UnknownScheme(id);
}

std::string scheme_to_string(SchemeId scheme) {
  return std::to_string(static_cast<int>(scheme));
}

void validate_scheme_dims(SchemeId scheme, const ProblemShape& shape,
                          int recovery_threshold, int realization_size) {
  const long l = recovery_threshold;
  const long m = realization_size;
  if (shape.a_rows % l != 0) throw PartitionError(shape.a_rows, l);
  switch (scheme) {
    case SchemeId::Scheme1:
      if (shape.b_cols % m != 0) throw PartitionError(shape.b_cols, m);
      break;
    case SchemeId::Scheme2:
      if (shape.a_rows % (l * m) != 0) throw PartitionError(shape.a_rows, l * m);
      break;
    case SchemeId::Scheme3:
      if (shape.inner_dim % m != 0) throw PartitionError(shape.inner_dim, m);
      break;
  }
}

std::size_t StoragePlan::index_of(int machine) const {
  auto it = std::find(machines.begin(), machines.end(), machine);
  if (it == machines.end()) {
    throw std::out_of_range("machine " + std::to_string(machine) +
                            " has no storage in this plan");
  }
  return static_cast<std::size_t>(it - machines.begin());
}

long StoragePlan::storage_symbols(int machine) const {
  const long coded_rows = shape.a_rows / recovery_threshold;
  long total = 0;
  for (const StorageUnit& unit : units[index_of(machine)]) {
    const long extent = unit.end - unit.begin;
    total += (unit.axis == Axis::RowWise) ? extent * shape.inner_dim
                                          : extent * coded_rows;
  }
  return total;
}

Rational StoragePlan::normalized_size(int machine) const {
  return Rational(storage_symbols(machine)) /
         Rational(shape.a_rows * shape.inner_dim);
}

PlacementResult storage_plan(SchemeId scheme, const SystemParams& params,
                             const AvailabilityRealization& realization,
                             const EvaluationPoints& points,
                             const FieldMatrix& data_a) {
  const int l = params.recovery_threshold;
  const int m = realization.size();
  const ProblemShape shape{data_a.rows(), data_a.cols(), 0};
  if (data_a.rows() % l != 0) throw PartitionError(data_a.rows(), l);
  if (scheme == SchemeId::Scheme2 && data_a.rows() % (static_cast<long>(l) * m) != 0) {
    throw PartitionError(data_a.rows(), static_cast<long>(l) * m);
  }
  if (scheme == SchemeId::Scheme3 && data_a.cols() % m != 0) {
    throw PartitionError(data_a.cols(), m);
  }
  const ComputationAssignment assignment =
      cyclic_assignment(realization, l, params.straggler_tolerance);

  // Row parts A_1..A_L of the data matrix; every coded payload is a linear
  // combination of (slices of) these.
  const std::vector<FieldMatrix> row_parts = partition(data_a, Axis::RowWise, l);
  const long coded_rows = data_a.rows() / l;

  PlacementResult result;
  result.plan = StoragePlan{scheme, m, shape, l, realization.members(), {}};
  result.plan.units.resize(static_cast<std::size_t>(m));
  result.payloads.resize(static_cast<std::size_t>(m));

  for (int rank = 1; rank <= m; ++rank) {
    const int machine = realization.member(rank);
    const FieldElement alpha = points.alpha_for(machine);
    auto& units = result.plan.units[static_cast<std::size_t>(rank - 1)];
    auto& storage = result.payloads[static_cast<std::size_t>(rank - 1)];
    storage.machine = machine;

    if (scheme == SchemeId::Scheme1) {
      FieldMatrix coded = encode_block(row_parts, points.betas, alpha);
      storage.encoding_mults = coded.symbol_count() * l;
      units.push_back(StorageUnit{Axis::RowWise, 0, coded_rows, std::nullopt});
      storage.blocks.push_back(
          CodedBlock{machine, std::nullopt, alpha, std::move(coded)});
      continue;
    }

    for (int group : assignment.groups_of(machine)) {
      std::vector<FieldMatrix> group_parts;
      group_parts.reserve(static_cast<std::size_t>(l));
      StorageUnit unit{};
      if (scheme == SchemeId::Scheme2) {
        const long extent = coded_rows / m;
        unit = StorageUnit{Axis::RowWise, (group - 1) * extent, group * extent,
                           group};
        for (const FieldMatrix& part : row_parts) {
          const long part_extent = part.rows() / m;
          group_parts.push_back(
              part.row_slice((group - 1) * part_extent, group * part_extent));
        }
      } else {
        const long extent = data_a.cols() / m;
        unit = StorageUnit{Axis::ColumnWise, (group - 1) * extent,
                           group * extent, group};
        for (const FieldMatrix& part : row_parts) {
          group_parts.push_back(
              part.col_slice((group - 1) * extent, group * extent));
        }
      }
      FieldMatrix coded = encode_block(group_parts, points.betas, alpha);
      storage.encoding_mults += coded.symbol_count() * l;
      units.push_back(unit);
      storage.blocks.push_back(
          CodedBlock{machine, group, alpha, std::move(coded)});
    }
  }
  return result;
}

long DownloadPlan::download_symbols(int machine,
                                    const ProblemShape& shape) const {
  auto it = std::find(machines.begin(), machines.end(), machine);
  if (it == machines.end()) return 0;
  const std::size_t idx = static_cast<std::size_t>(it - machines.begin());
  const long whole = shape.inner_dim * shape.b_cols;
  if (entire_b[idx]) return whole;
  return whole / realization_size *
         static_cast<long>(block_groups[idx].size());
}

DownloadResult download_plan(SchemeId scheme,
                             const AvailabilityRealization& realization,
                             const ComputationAssignment& assignment,
                             const FieldMatrix& input_b) {
  const int m = realization.size();
  if (assignment.group_count() != m) {
    throw DimError("assignment does not match realization size");
  }

  DownloadResult result;
  result.plan = DownloadPlan{scheme, m, realization.members(), {}, {}};
  result.plan.entire_b.assign(static_cast<std::size_t>(m),
                              scheme == SchemeId::Scheme2);
  result.plan.block_groups.resize(static_cast<std::size_t>(m));
  result.payloads.resize(static_cast<std::size_t>(m));

  std::vector<FieldMatrix> b_blocks;
  if (scheme == SchemeId::Scheme1) {
    b_blocks = partition(input_b, Axis::ColumnWise, m);
  } else if (scheme == SchemeId::Scheme3) {
    b_blocks = partition(input_b, Axis::RowWise, m);
  }

  for (int rank = 1; rank <= m; ++rank) {
    const int machine = realization.member(rank);
    auto& payload = result.payloads[static_cast<std::size_t>(rank - 1)];
    payload.machine = machine;
    if (scheme == SchemeId::Scheme2) {
      payload.entire = true;
      payload.blocks.emplace_back(0, input_b);
      continue;
    }
    for (int group : assignment.groups_of(machine)) {
      result.plan.block_groups[static_cast<std::size_t>(rank - 1)].push_back(group);
      payload.blocks.emplace_back(
          group, b_blocks[static_cast<std::size_t>(group - 1)]);
    }
  }
  return result;
}

std::vector<ResultPoint> worker_compute(SchemeId scheme, int machine,
                                        const MachineStorage& stored,
                                        const MachineDownload& downloaded,
                                        const ComputationAssignment& assignment) {
  if (stored.machine != machine || downloaded.machine != machine) {
    throw IncompleteInputs("payloads addressed to a different machine");
  }
  const std::vector<int> groups = assignment.groups_of(machine);
  if (groups.empty()) {
    throw IncompleteInputs("machine " + std::to_string(machine) +
                           " belongs to no group");
  }

  auto stored_block = [&](std::optional<int> group) -> const CodedBlock& {
    for (const CodedBlock& block : stored.blocks) {
      if (block.group == group) return block;
    }
    throw IncompleteInputs(
        "machine " + std::to_string(machine) + " missing stored block" +
        (group ? " for group " + std::to_string(*group) : ""));
  };
  auto downloaded_block = [&](int group) -> const FieldMatrix& {
    for (const auto& [g, block] : downloaded.blocks) {
      if (g == group) return block;
    }
    throw IncompleteInputs("machine " + std::to_string(machine) +
                           " missing downloaded block for group " +
                           std::to_string(group));
  };

  std::vector<ResultPoint> results;
  results.reserve(groups.size());
  for (int group : groups) {
    const FieldMatrix* left = nullptr;
    const FieldMatrix* right = nullptr;
    FieldElement point;
    switch (scheme) {
      case SchemeId::Scheme1: {
        const CodedBlock& block = stored_block(std::nullopt);
        left = &block.payload;
        right = &downloaded_block(group);
        point = block.point;
        break;
      }
      case SchemeId::Scheme2: {
        const CodedBlock& block = stored_block(group);
        if (!downloaded.entire || downloaded.blocks.empty()) {
          throw IncompleteInputs("machine " + std::to_string(machine) +
                                 " missing the full input matrix");
        }
        left = &block.payload;
        right = &downloaded.blocks.front().second;
        point = block.point;
        break;
      }
      case SchemeId::Scheme3: {
        const CodedBlock& block = stored_block(group);
        left = &block.payload;
        right = &downloaded_block(group);
        point = block.point;
        break;
      }
    }
    results.push_back(
        ResultPoint{group, machine, point, reference_matmul(*left, *right)});
  }
  return results;
}

namespace {

struct GroupDecode {
  std::vector<FieldElement> nodes;
  std::vector<FieldMatrix> values;
};

void check_payload_shape(const FieldMatrix& payload, long rows, long cols,
                         int group) {
  if (payload.rows() != rows || payload.cols() != cols) {
    throw DimError("group " + std::to_string(group) + " payload is " +
                   std::to_string(payload.rows()) + "x" +
                   std::to_string(payload.cols()) + ", expected " +
                   std::to_string(rows) + "x" + std::to_string(cols));
  }
}

}  // namespace

FieldMatrix master_decode(SchemeId scheme,
                          const std::vector<ResultPoint>& results,
                          const ComputationAssignment& assignment,
                          const EvaluationPoints& points,
                          const ProblemShape& shape, int recovery_threshold,
                          DecodeStats* stats) {
  const int m = assignment.group_count();
  const long l = recovery_threshold;
  const long coded_rows = shape.a_rows / l;

  long expect_rows = 0;
  long expect_cols = 0;
  switch (scheme) {
    case SchemeId::Scheme1:
      expect_rows = coded_rows;
      expect_cols = shape.b_cols / m;
      break;
    case SchemeId::Scheme2:
      expect_rows = coded_rows / m;
      expect_cols = shape.b_cols;
      break;
    case SchemeId::Scheme3:
      expect_rows = coded_rows;
      expect_cols = shape.b_cols;
      break;
  }

  long mults = 0;
  // blocks[l-1][g-1] = decoded product block of part l and group g.
  std::vector<std::vector<FieldMatrix>> blocks(
      static_cast<std::size_t>(l));

  for (int group = 1; group <= m; ++group) {
    // Recovery set: the first L arrivals; arrival ties resolved by machine
    // index, so with simultaneous arrival this is the L lowest labels.
    std::map<int, const ResultPoint*> by_machine;
    for (const ResultPoint& r : results) {
      if (r.group != group) continue;
      if (!assignment.group_contains(group, r.machine)) continue;
      by_machine.emplace(r.machine, &r);
    }
    if (static_cast<long>(by_machine.size()) < l) {
      throw DecodeThresholdNotMet(group, static_cast<int>(by_machine.size()),
                                  recovery_threshold);
    }
    GroupDecode decode;
    for (const auto& [machine, r] : by_machine) {
      if (static_cast<long>(decode.nodes.size()) == l) break;
      check_payload_shape(r->payload, expect_rows, expect_cols, group);
      decode.nodes.push_back(points.alpha_for(machine));
      decode.values.push_back(r->payload);
    }
    for (int part = 1; part <= l; ++part) {
      FieldMatrix block = interpolate_at(decode.nodes, decode.values,
                                         points.beta(part));
      mults += block.symbol_count() * l;
      blocks[static_cast<std::size_t>(part - 1)].push_back(std::move(block));
    }
  }

  if (stats) stats->interpolation_mults = mults;

  // Assembly differs per scheme; see the per-scheme block shapes above.
  std::vector<FieldMatrix> strips;
  strips.reserve(static_cast<std::size_t>(l));
  switch (scheme) {
    case SchemeId::Scheme1:
      for (const auto& row : blocks) strips.push_back(assemble(row, Axis::ColumnWise));
      return assemble(strips, Axis::RowWise);
    case SchemeId::Scheme2: {
      std::vector<FieldMatrix> flat;
      flat.reserve(static_cast<std::size_t>(l * m));
      for (auto& row : blocks) {
        for (auto& block : row) flat.push_back(std::move(block));
      }
      return assemble(flat, Axis::RowWise);
    }
    case SchemeId::Scheme3:
      // Column blocks of A times row blocks of B: each part's product is the
      // sum over groups.
      for (const auto& row : blocks) {
        FieldMatrix sum = row.front();
        for (std::size_t g = 1; g < row.size(); ++g) {
          sum = matrix_add(sum, row[g]);
        }
        strips.push_back(std::move(sum));
      }
      return assemble(strips, Axis::RowWise);
  }
  throw UnknownScheme("invalid scheme enum value");
}

}  // namespace lcsud
