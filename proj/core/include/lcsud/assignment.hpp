#pragma once

#include <cstdint>
#include <vector>

#include "lcsud/errors.hpp"

namespace lcsud {

/// Cluster parameters: N machines, recovery threshold L, straggler
/// tolerance S, preemption tolerance U.
struct SystemParams {
  int machines;
  int recovery_threshold;
  int straggler_tolerance;
  int preemption_tolerance;

  int group_width() const { return recovery_threshold + straggler_tolerance; }
  /// Smallest realization size supported: max(L+S, N-U).
  int min_realization_size() const;
  /// Throws ConfigError unless L >= 1, S >= 0, N >= L+S, 0 <= U <= N-(L+S).
  void validate() const;
};

/// The ordered set of available machines at one time step. Member labels
/// are strictly increasing; ranks are 1-based positions in that order.
class AvailabilityRealization {
 public:
  explicit AvailabilityRealization(std::vector<int> members);

  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<int>& members() const { return members_; }
  /// Machine label at 1-based rank.
  int member(int rank) const { return members_[static_cast<std::size_t>(rank - 1)]; }
  /// 1-based rank of a machine label; throws std::out_of_range if absent.
  int rank_of(int machine) const;
  bool contains(int machine) const;

  friend bool operator==(const AvailabilityRealization& a,
                         const AvailabilityRealization& b) {
    return a.members_ == b.members_;
  }

 private:
  std::vector<int> members_;
};

/// 1-based modulo: mod1(a, m) = a - m*floor((a-1)/m), in [1, m].
int mod1(long long a, long long m);

/// Cyclic groups of width L+S over a realization. groups[g-1] lists the
/// member labels of group g in cyclic rank order starting at rank g.
struct ComputationAssignment {
  int group_width;
  std::vector<std::vector<int>> groups;

  int group_count() const { return static_cast<int>(groups.size()); }
  bool group_contains(int group, int machine) const;
  /// Ascending ids of the groups containing a machine.
  std::vector<int> groups_of(int machine) const;
};

/// Throws InsufficientMachines when the realization is smaller than L+S.
ComputationAssignment cyclic_assignment(const AvailabilityRealization& realization,
                                        int recovery_threshold,
                                        int straggler_tolerance);

/// Exact count of realizations with size in [max(L+S, N-U), N].
unsigned long long count_realizations(const SystemParams& params);

/// All supported realizations, largest size first, lexicographic within a
/// size. Throws EnumerationTooLarge when the count exceeds the cap; callers
/// then fall back to the closed-form size/rank analysis.
std::vector<AvailabilityRealization> enumerate_realizations(
    const SystemParams& params, unsigned long long cap = 1000000);

}  // namespace lcsud
