#include "lcsud/elasticity.hpp"

#include <algorithm>

#include "lcsud/assignment.hpp"

namespace lcsud {

void IntervalUnion::add(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) return;
  Rational begin = lo;
  Rational end = hi;
  std::vector<std::pair<Rational, Rational>> merged;
  merged.reserve(intervals_.size() + 1);
  for (const auto& iv : intervals_) {
    if (iv.second < begin || end < iv.first) {
      merged.push_back(iv);  // disjoint and non-adjacent
    } else {
      begin = std::min(begin, iv.first);
      end = std::max(end, iv.second);
    }
  }
  merged.emplace_back(begin, end);
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  intervals_ = std::move(merged);
}

Rational IntervalUnion::measure() const {
  Rational total(0);
  for (const auto& iv : intervals_) total += iv.second - iv.first;
  return total;
}

bool IntervalUnion::covers(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) return true;
  for (const auto& iv : intervals_) {
    if (iv.first <= lo && hi <= iv.second) return true;
  }
  return false;
}

std::vector<SizeRankWindow> machine_windows(int machines,
                                            int preemption_tolerance,
                                            int recovery_threshold,
                                            int straggler_tolerance,
                                            int machine) {
  SystemParams params{machines, recovery_threshold, straggler_tolerance,
                      preemption_tolerance};
  params.validate();
  if (machine < 1 || machine > machines) {
    throw ConfigError("machine label " + std::to_string(machine) +
                      " out of range");
  }
  std::vector<SizeRankWindow> windows;
  for (int size = params.min_realization_size(); size <= machines; ++size) {
    const int lo = std::max(1, size - (machines - machine));
    const int hi = std::min(size, machine);
    for (int rank = lo; rank <= hi; ++rank) {
      windows.push_back(SizeRankWindow{size, rank});
    }
  }
  return windows;
}

std::vector<std::pair<Rational, Rational>> realization_slices(
    int realization_size, int rank, int group_width) {
  // rank is in group g exactly when g == rank - j (mod m) for some
  // j in [0, group_width).
  std::vector<std::pair<Rational, Rational>> slices;
  slices.reserve(static_cast<std::size_t>(group_width));
  const long long m = realization_size;
  for (int j = 0; j < group_width; ++j) {
    const int g = mod1(static_cast<long long>(rank) - j +
                       static_cast<long long>(group_width) * m, m);
    slices.emplace_back(Rational(g - 1, m), Rational(g, m));
  }
  return slices;
}

UnionStoragePlan union_placement(SchemeId scheme, int machines,
                                 int preemption_tolerance,
                                 int recovery_threshold,
                                 int straggler_tolerance) {
  UnionStoragePlan plan{scheme,
                        machines,
                        preemption_tolerance,
                        recovery_threshold,
                        straggler_tolerance,
                        scheme == SchemeId::Scheme3 ? Axis::ColumnWise
                                                    : Axis::RowWise,
                        {}};
  plan.per_machine.resize(static_cast<std::size_t>(machines));

  const int width = recovery_threshold + straggler_tolerance;
  for (int machine = 1; machine <= machines; ++machine) {
    IntervalUnion& stored = plan.per_machine[static_cast<std::size_t>(machine - 1)];
    if (scheme == SchemeId::Scheme1) {
      stored.add(Rational(0), Rational(1));
      continue;
    }
    for (const SizeRankWindow& window :
         machine_windows(machines, preemption_tolerance, recovery_threshold,
                         straggler_tolerance, machine)) {
      for (const auto& [lo, hi] :
           realization_slices(window.realization_size, window.rank, width)) {
        stored.add(lo, hi);
      }
    }
  }
  return plan;
}

StorageFractions storage_fraction(const UnionStoragePlan& plan) {
  StorageFractions fractions;
  fractions.per_machine.reserve(plan.per_machine.size());
  fractions.system = Rational(0);
  for (const IntervalUnion& stored : plan.per_machine) {
    Rational f = stored.measure() / Rational(plan.recovery_threshold);
    fractions.system += f;
    fractions.per_machine.push_back(std::move(f));
  }
  return fractions;
}

}  // namespace lcsud
