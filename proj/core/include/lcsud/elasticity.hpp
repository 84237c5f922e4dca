#pragma once

#include <utility>
#include <vector>

#include "lcsud/matrix.hpp"
#include "lcsud/rational.hpp"
#include "lcsud/schemes.hpp"

namespace lcsud {

/// Union of half-open intervals over [0, 1] with exact rational endpoints.
/// Kept sorted, disjoint, non-adjacent, each nonempty.
class IntervalUnion {
 public:
  /// Adds [lo, hi), merging with existing intervals.
  void add(const Rational& lo, const Rational& hi);

  const std::vector<std::pair<Rational, Rational>>& intervals() const {
    return intervals_;
  }
  Rational measure() const;
  bool empty() const { return intervals_.empty(); }
  /// True iff [lo, hi) is fully covered.
  bool covers(const Rational& lo, const Rational& hi) const;

  friend bool operator==(const IntervalUnion& a, const IntervalUnion& b) {
    return a.intervals_ == b.intervals_;
  }

 private:
  std::vector<std::pair<Rational, Rational>> intervals_;
};

/// One (realization size, rank) combination a machine can attain.
struct SizeRankWindow {
  int realization_size;
  int rank;

  friend bool operator==(const SizeRankWindow& a, const SizeRankWindow& b) {
    return a.realization_size == b.realization_size && a.rank == b.rank;
  }
  friend bool operator<(const SizeRankWindow& a, const SizeRankWindow& b) {
    if (a.realization_size != b.realization_size)
      return a.realization_size < b.realization_size;
    return a.rank < b.rank;
  }
};

/// Closed-form enumeration of every (size m, rank rho) the machine attains
/// over the supported realizations: m in [max(L+S, N-U), N] and
/// rho in [max(1, m-(N-n)), min(m, n)].
std::vector<SizeRankWindow> machine_windows(int machines,
                                            int preemption_tolerance,
                                            int recovery_threshold,
                                            int straggler_tolerance,
                                            int machine);

/// Per-machine union of the coded-matrix slices required across every
/// supported realization. Schemes 2 and 3 store interval unions over the
/// normalized row (resp. column) axis; Scheme 1 stores the full interval.
struct UnionStoragePlan {
  SchemeId scheme;
  int machines;
  int preemption_tolerance;
  int recovery_threshold;
  int straggler_tolerance;
  Axis axis;
  std::vector<IntervalUnion> per_machine;  // index n-1
};

UnionStoragePlan union_placement(SchemeId scheme, int machines,
                                 int preemption_tolerance,
                                 int recovery_threshold,
                                 int straggler_tolerance);

struct StorageFractions {
  std::vector<Rational> per_machine;  // measure / L
  Rational system;                    // sum over machines
};

StorageFractions storage_fraction(const UnionStoragePlan& plan);

/// Normalized intervals a machine must store to serve one realization:
/// one interval [(g-1)/m, g/m) per group containing the machine's rank.
std::vector<std::pair<Rational, Rational>> realization_slices(
    int realization_size, int rank, int group_width);

}  // namespace lcsud
