#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcsud/assignment.hpp"
#include "lcsud/lagrange.hpp"
#include "lcsud/matrix.hpp"
#include "lcsud/rational.hpp"

namespace lcsud {

/// The three elastic coding schemes.
///   Scheme1: whole coded matrix stored, column blocks of B downloaded.
///   Scheme2: row slices of the coded matrix stored, entire B downloaded.
///   Scheme3: column slices stored, row blocks of B downloaded.
enum class SchemeId { Scheme1 = 1, Scheme2 = 2, Scheme3 = 3 };

/// Parses "1" | "2" | "3"; throws UnknownScheme.
SchemeId scheme_from_string(const std::string& id);
std::string scheme_to_string(SchemeId scheme);

/// Problem dimensions: A is a_rows x inner_dim, B is inner_dim x b_cols.
struct ProblemShape {
  long a_rows;
  long inner_dim;
  long b_cols;
};

/// Throws PartitionError if any scheme-specific divisibility fails for a
/// realization of the given size.
void validate_scheme_dims(SchemeId scheme, const ProblemShape& shape,
                          int recovery_threshold, int realization_size);

/// One stored unit: an interval of the machine's full coded matrix
/// (a_rows/L x inner_dim). group is absent for whole-matrix storage.
struct StorageUnit {
  Axis axis;
  long begin;
  long end;
  std::optional<int> group;
};

struct StoragePlan {
  SchemeId scheme;
  int realization_size;  // granularity m
  ProblemShape shape;
  int recovery_threshold;
  std::vector<int> machines;                    // realization members
  std::vector<std::vector<StorageUnit>> units;  // parallel to machines

  long storage_symbols(int machine) const;
  /// Stored symbols normalized by the size of A.
  Rational normalized_size(int machine) const;

 private:
  std::size_t index_of(int machine) const;
};

/// Coded payloads held by one machine, plus the master-side multiplication
/// count spent producing them.
struct MachineStorage {
  int machine = 0;
  std::vector<CodedBlock> blocks;
  long encoding_mults = 0;
};

struct PlacementResult {
  StoragePlan plan;
  std::vector<MachineStorage> payloads;  // parallel to plan.machines
};

/// Encodes the data matrix and places coded content on every machine of the
/// realization according to the scheme. Throws PartitionError on
/// divisibility violations.
PlacementResult storage_plan(SchemeId scheme, const SystemParams& params,
                             const AvailabilityRealization& realization,
                             const EvaluationPoints& points,
                             const FieldMatrix& data_a);

struct DownloadPlan {
  SchemeId scheme;
  int realization_size;
  std::vector<int> machines;
  std::vector<bool> entire_b;                   // parallel to machines
  std::vector<std::vector<int>> block_groups;   // ascending group ids

  long download_symbols(int machine, const ProblemShape& shape) const;
};

/// Input blocks delivered to one machine. Whole-matrix downloads carry a
/// single block with group id 0.
struct MachineDownload {
  int machine = 0;
  bool entire = false;
  std::vector<std::pair<int, FieldMatrix>> blocks;
};

struct DownloadResult {
  DownloadPlan plan;
  std::vector<MachineDownload> payloads;
};

/// Splits the input matrix per scheme and ships each machine the blocks of
/// the groups it belongs to (or the whole matrix for Scheme 2).
DownloadResult download_plan(SchemeId scheme,
                             const AvailabilityRealization& realization,
                             const ComputationAssignment& assignment,
                             const FieldMatrix& input_b);

/// One computed product: an evaluation of the group polynomial at the
/// machine's point.
struct ResultPoint {
  int group;
  int machine;
  FieldElement point;
  FieldMatrix payload;
};

/// Local work of one machine: one product per group it belongs to.
/// Throws IncompleteInputs when a stored or downloaded payload is missing.
std::vector<ResultPoint> worker_compute(SchemeId scheme, int machine,
                                        const MachineStorage& stored,
                                        const MachineDownload& downloaded,
                                        const ComputationAssignment& assignment);

struct DecodeStats {
  long interpolation_mults = 0;
};

/// Interpolates each group at the beta points from the first L results
/// (ties broken by machine index) and assembles the full product.
/// Throws DecodeThresholdNotMet when any group has fewer than L results.
FieldMatrix master_decode(SchemeId scheme,
                          const std::vector<ResultPoint>& results,
                          const ComputationAssignment& assignment,
                          const EvaluationPoints& points,
                          const ProblemShape& shape, int recovery_threshold,
                          DecodeStats* stats = nullptr);

}  // namespace lcsud
