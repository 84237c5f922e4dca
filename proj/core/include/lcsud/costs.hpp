#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lcsud/rational.hpp"
#include "lcsud/schemes.hpp"

namespace lcsud {

/// Rows of the analytic cost table: the three schemes plus four published
/// baselines, identified by their storage/download strategy.
enum class CostModelId {
  Scheme1,
  Scheme2,
  Scheme3,
  MdsStorageUncodedDownload,    // MDS-coded storage, plain download
  UncodedStorageCodedDownload,  // replicated data, coded download
  HierarchicalUncodedStorage,   // hierarchical placement, coded download
  CodedStorageCodedDownload,    // both sides coded; no straggler tolerance
};

const std::vector<CostModelId>& all_cost_models();
std::string cost_model_name(CostModelId id);
/// Parses a cost-model name or "1"/"2"/"3". Throws UnknownScheme.
CostModelId cost_model_from_string(const std::string& id);
/// All models except CodedStorageCodedDownload tolerate stragglers.
bool is_straggler_tolerant(CostModelId id);

/// Per-machine cost metrics in field symbols (storage normalized by the
/// size of A; encoding/computing/decoding in multiplication counts).
struct CostReport {
  CostModelId id;
  Rational storage_size;
  Rational encoding;
  Rational download;
  Rational computing;
  Rational upload;
  Rational decoding;
  /// Decoding entry is an order-of-magnitude constant, not a count.
  bool decoding_order_only = false;
};

/// Evaluates one row for realization size m. Requires m >= L+S for the
/// proposed schemes.
CostReport cost_row(CostModelId id, int realization_size,
                    int recovery_threshold, int straggler_tolerance,
                    long a_rows, long inner_dim, long b_cols);

/// One point of the storage-size comparison: system-wide storage under a
/// preemption budget, for full coded replication (coded_full), the
/// replication lower bound 1+U (replication_bound), full data replication
/// (uncoded_full), and the union placement of Schemes 2/3 (union_storage).
struct StorageCurveRow {
  int preemption_budget;
  Rational coded_full;
  Rational replication_bound;
  Rational uncoded_full;
  Rational union_storage;
};

std::vector<StorageCurveRow> storage_size_curves(int machines = 20,
                                                 int recovery_threshold = 5,
                                                 int straggler_tolerance = 0,
                                                 int max_preemption = 15);

/// CSV: header "id,storage,encoding,download,computing,upload,decoding";
/// rationals rendered as num/den.
void write_cost_table_csv(std::ostream& out,
                          const std::vector<CostReport>& rows);

/// CSV: header "U,blue,black,green,red".
void write_storage_curves_csv(std::ostream& out,
                              const std::vector<StorageCurveRow>& rows);

}  // namespace lcsud
