#include "lcsud/costs.hpp"

#include <ostream>

#include "lcsud/elasticity.hpp"

namespace lcsud {

const std::vector<CostModelId>& all_cost_models() {
  static const std::vector<CostModelId> models = {
      CostModelId::Scheme1,
      CostModelId::Scheme2,
      CostModelId::Scheme3,
      CostModelId::MdsStorageUncodedDownload,
      CostModelId::UncodedStorageCodedDownload,
      CostModelId::HierarchicalUncodedStorage,
      CostModelId::CodedStorageCodedDownload,
  };
  return models;
}

std::string cost_model_name(CostModelId id) {
  switch (id) {
    case CostModelId::Scheme1:
      return "scheme1";
    case CostModelId::Scheme2:
      return "scheme2";
    case CostModelId::Scheme3:
      return "scheme3";
    case CostModelId::MdsStorageUncodedDownload:
      return "mds-storage-uncoded-download";
    case CostModelId::UncodedStorageCodedDownload:
      return "uncoded-storage-coded-download";
    case CostModelId::HierarchicalUncodedStorage:
      return "hierarchical-uncoded-storage";
    case CostModelId::CodedStorageCodedDownload:
      return "coded-storage-coded-download";
  }
  throw UnknownScheme("invalid cost model enum value");
}

CostModelId cost_model_from_string(const std::string& id) {
  for (CostModelId model : all_cost_models()) {
    if (cost_model_name(model) == id) return model;
  }
  if (id == "1") return CostModelId::Scheme1;
  if (id == "2") return CostModelId::Scheme2;
  if (id == "3") return CostModelId::Scheme3;
  throw UnknownScheme(id);
}

bool is_straggler_tolerant(CostModelId id) {
  return id != CostModelId::CodedStorageCodedDownload;
}

CostReport cost_row(CostModelId id, int realization_size,
                    int recovery_threshold, int straggler_tolerance,
                    long a_rows, long inner_dim, long b_cols) {
  const long long m = realization_size;
  const long long l = recovery_threshold;
  const long long s = straggler_tolerance;
  const long long q = a_rows;
  const long long v = inner_dim;
  const long long r = b_cols;
  if (m < 1 || l < 1 || s < 0) {
    throw ConfigError("cost_row needs m >= 1, L >= 1, S >= 0");
  }
  const bool proposed = id == CostModelId::Scheme1 ||
                        id == CostModelId::Scheme2 ||
                        id == CostModelId::Scheme3;
  if (proposed && m < l + s) {
    throw ConfigError("proposed schemes need realization size >= L+S");
  }

  CostReport report;
  report.id = id;
  switch (id) {
    case CostModelId::Scheme1:
      report.storage_size = Rational(1, l);
      report.encoding = Rational(q * v);
      report.download = Rational(v * r * (l + s), m);
      report.computing = Rational(q * v * r * (l + s), l * m);
      report.upload = Rational(q * r * (l + s), l * m);
      report.decoding = Rational(q * r * l);
      break;
    case CostModelId::Scheme2:
      report.storage_size = Rational(l + s, l * m);
      report.encoding = Rational(q * v * (l + s), m);
      report.download = Rational(v * r);
      report.computing = Rational(q * v * r * (l + s), l * m);
      report.upload = Rational(q * r * (l + s), l * m);
      report.decoding = Rational(q * r * l);
      break;
    case CostModelId::Scheme3:
      report.storage_size = Rational(l + s, l * m);
      report.encoding = Rational(q * v * (l + s), m);
      report.download = Rational(v * r * (l + s), m);
      report.computing = Rational(q * v * r * (l + s), l * m);
      report.upload = Rational(q * r * (l + s), l);
      report.decoding = Rational(q * r * l * m);
      break;
    case CostModelId::MdsStorageUncodedDownload:
      report.storage_size = Rational(1, l);
      report.encoding = Rational(q * v);
      report.download = Rational(v * r);
      report.computing = Rational(q * v * r * (l + s), l * m);
      report.upload = Rational(q * r * (l + s), l * m);
      report.decoding = Rational(q * r * l);
      break;
    case CostModelId::UncodedStorageCodedDownload:
      report.storage_size = Rational(1);
      report.encoding = Rational(v * r * (l + s), m);
      report.download = Rational(v * r * (l + s), l * m);
      report.computing = Rational(q * v * r * (l + s), l * m);
      report.upload = Rational(q * r * (l + s), l * m);
      report.decoding = Rational(q * r * l);
      break;
    case CostModelId::HierarchicalUncodedStorage:
      report.storage_size = Rational(l + s, m);
      report.encoding = Rational(v * r);
      report.download = Rational(v * r, l);
      report.computing = Rational(q * v * r * (l + s), l * m);
      report.upload = Rational(q * r * (l + s), l * m);
      report.decoding = Rational(q * r * l);
      break;
    case CostModelId::CodedStorageCodedDownload:
      report.storage_size = Rational(1, l);
      report.encoding = Rational(q * v) + Rational(v * r * l, m);
      report.download = Rational(v * r, m);
      report.computing = Rational(q * v * r, m);
      report.upload = Rational(q * r * l);
      report.decoding = Rational(1);
      report.decoding_order_only = true;
      break;
  }
  return report;
}

std::vector<StorageCurveRow> storage_size_curves(int machines,
                                                 int recovery_threshold,
                                                 int straggler_tolerance,
                                                 int max_preemption) {
  std::vector<StorageCurveRow> rows;
  rows.reserve(static_cast<std::size_t>(max_preemption) + 1);
  for (int u = 0; u <= max_preemption; ++u) {
    const UnionStoragePlan plan =
        union_placement(SchemeId::Scheme2, machines, u, recovery_threshold,
                        straggler_tolerance);
    rows.push_back(StorageCurveRow{
        u,
        Rational(machines, recovery_threshold),
        Rational(1 + u),
        Rational(machines),
        storage_fraction(plan).system,
    });
  }
  return rows;
}

void write_cost_table_csv(std::ostream& out,
                          const std::vector<CostReport>& rows) {
  out << "id,storage,encoding,download,computing,upload,decoding\n";
  for (const CostReport& row : rows) {
    out << cost_model_name(row.id) << "," << row.storage_size.str() << ","
        << row.encoding.str() << "," << row.download.str() << ","
        << row.computing.str() << "," << row.upload.str() << ","
        << row.decoding.str() << "\n";
  }
}

void write_storage_curves_csv(std::ostream& out,
                              const std::vector<StorageCurveRow>& rows) {
  out << "U,blue,black,green,red\n";
  for (const StorageCurveRow& row : rows) {
    out << row.preemption_budget << "," << row.coded_full.str() << ","
        << row.replication_bound.str() << "," << row.uncoded_full.str() << ","
        << row.union_storage.str() << "\n";
  }
}

}  // namespace lcsud
