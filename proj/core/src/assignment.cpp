#include "lcsud/assignment.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lcsud {

int SystemParams::min_realization_size() const {
  return std::max(group_width(), machines - preemption_tolerance);
}

void SystemParams::validate() const {
  if (recovery_threshold < 1) {
    throw ConfigError("recovery threshold must be at least 1");
  }
  if (straggler_tolerance < 0) {
    throw ConfigError("straggler tolerance must be nonnegative");
  }
  if (machines < group_width()) {
    throw ConfigError("need at least " + std::to_string(group_width()) +
                      " machines, have " + std::to_string(machines));
  }
  if (preemption_tolerance < 0 ||
      preemption_tolerance > machines - group_width()) {
    throw ConfigError("preemption tolerance must lie in [0, " +
                      std::to_string(machines - group_width()) + "], got " +
                      std::to_string(preemption_tolerance));
  }
}

AvailabilityRealization::AvailabilityRealization(std::vector<int> members)
    : members_(std::move(members)) {
  if (members_.empty()) {
    throw std::invalid_argument("realization must not be empty");
  }
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 1 || (i > 0 && members_[i] <= members_[i - 1])) {
      throw std::invalid_argument(
          "realization members must be strictly increasing machine labels");
    }
  }
}

int AvailabilityRealization::rank_of(int machine) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), machine);
  if (it == members_.end() || *it != machine) {
    throw std::out_of_range("machine " + std::to_string(machine) +
                            " not in realization");
  }
  return static_cast<int>(it - members_.begin()) + 1;
}

bool AvailabilityRealization::contains(int machine) const {
  return std::binary_search(members_.begin(), members_.end(), machine);
}

int mod1(long long a, long long m) {
  return static_cast<int>(a - m * ((a - 1) / m));
}

bool ComputationAssignment::group_contains(int group, int machine) const {
  const auto& g = groups[static_cast<std::size_t>(group - 1)];
  return std::find(g.begin(), g.end(), machine) != g.end();
}

std::vector<int> ComputationAssignment::groups_of(int machine) const {
  std::vector<int> out;
  for (int g = 1; g <= group_count(); ++g) {
    if (group_contains(g, machine)) out.push_back(g);
  }
  return out;
}

ComputationAssignment cyclic_assignment(const AvailabilityRealization& realization,
                                        int recovery_threshold,
                                        int straggler_tolerance) {
  const int width = recovery_threshold + straggler_tolerance;
  const int m = realization.size();
  if (m < width) throw InsufficientMachines(m, width);

  ComputationAssignment assignment;
  assignment.group_width = width;
  assignment.groups.resize(static_cast<std::size_t>(m));
  for (int g = 1; g <= m; ++g) {
    auto& group = assignment.groups[static_cast<std::size_t>(g - 1)];
    group.reserve(static_cast<std::size_t>(width));
    for (int j = 0; j < width; ++j) {
      group.push_back(realization.member(mod1(g + j, m)));
    }
  }
  return assignment;
}

namespace {

unsigned long long binomial_capped(int n, int k, unsigned long long limit) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    // Exact at every step: the prefix value is C(n-k+i, i).
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > limit) return limit + 1;
  }
  return static_cast<unsigned long long>(result);
}

}  // namespace

unsigned long long count_realizations(const SystemParams& params) {
  params.validate();
  constexpr unsigned long long kSaturate = ~0ull / 2;
  unsigned long long total = 0;
  for (int size = params.min_realization_size(); size <= params.machines;
       ++size) {
    unsigned long long c = binomial_capped(params.machines, size, kSaturate);
    if (c > kSaturate - total) return kSaturate;
    total += c;
  }
  return total;
}

std::vector<AvailabilityRealization> enumerate_realizations(
    const SystemParams& params, unsigned long long cap) {
  const unsigned long long count = count_realizations(params);
  if (count > cap) throw EnumerationTooLarge(count, cap);

  std::vector<AvailabilityRealization> out;
  out.reserve(static_cast<std::size_t>(count));
  const int n = params.machines;
  // Largest size first; lexicographic member order within a size.
  for (int size = n; size >= params.min_realization_size(); --size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
      out.emplace_back(pick);
      int i = size - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - (size - 1 - i)) {
        --i;
      }
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) {
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  return out;
}

}  // namespace lcsud
