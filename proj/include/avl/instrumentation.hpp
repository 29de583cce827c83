#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "avl/types.hpp"

namespace avl {

/// Per-kind rotation tallies. Integral for raw counts, floating point for
/// per-iteration means.
template <class T>
struct BasicRotationCounters {
  T ll{};
  T lr{};
  T rl{};
  T rr{};

  [[nodiscard]] constexpr T sum() const noexcept { return ll + lr + rl + rr; }

  constexpr T& operator[](RotationKind kind) noexcept {
    switch (kind) {
      case RotationKind::LL: return ll;
      case RotationKind::LR: return lr;
      case RotationKind::RL: return rl;
      case RotationKind::RR: return rr;
    }
    return ll;
  }
  constexpr const T& operator[](RotationKind kind) const noexcept {
    return const_cast<BasicRotationCounters&>(*this)[kind];
  }

  constexpr BasicRotationCounters& operator+=(const BasicRotationCounters& other) noexcept {
    ll += other.ll;
    lr += other.lr;
    rl += other.rl;
    rr += other.rr;
    return *this;
  }

  friend constexpr bool operator==(const BasicRotationCounters&, const BasicRotationCounters&) = default;
};

using RotationCounters = BasicRotationCounters<std::uint64_t>;
using RotationAverages = BasicRotationCounters<double>;

constexpr RotationAverages to_averages(const RotationCounters& counts) noexcept {
  return {static_cast<double>(counts.ll), static_cast<double>(counts.lr), static_cast<double>(counts.rl),
          static_cast<double>(counts.rr)};
}

/// Rotation totals for one strategy over a run, split by phase.
struct StrategyTally {
  ReplacementStrategy strategy = ReplacementStrategy::Optimum;
  RotationCounters insert_counters;
  RotationCounters delete_counters;
  std::uint64_t iterations = 0;

  void record(const RotationEvent& event) noexcept {
    auto& counters = event.phase == Phase::Insert ? insert_counters : delete_counters;
    ++counters[event.kind];
  }

  /// Adds another tally for the same strategy.
  void merge(const StrategyTally& other);

  friend bool operator==(const StrategyTally&, const StrategyTally&) = default;
};

[[nodiscard]] inline StrategyTally record(StrategyTally tally, const RotationEvent& event) noexcept {
  tally.record(event);
  return tally;
}

struct TallyAverages {
  RotationAverages insert;
  RotationAverages deletion;
};

/// Per-iteration means. Throws PreconditionError when iterations is zero.
RotationAverages average(const RotationCounters& totals, std::uint64_t iterations);
TallyAverages average(const StrategyTally& tally);

/// Raised when a baseline column averages to zero.
class DegenerateBaselineError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// 100 x optimum / mean(baseline_a, baseline_b) for LL, LR, RL, RR and Sum.
struct PercentageRow {
  double ll = 0;
  double lr = 0;
  double rl = 0;
  double rr = 0;
  double sum = 0;

  /// Nearest-integer values, as printed in the table.
  [[nodiscard]] std::array<long, 5> rounded() const;

  friend bool operator==(const PercentageRow&, const PercentageRow&) = default;
};

PercentageRow percentage_row(const RotationAverages& optimum, const RotationAverages& baseline_a,
                             const RotationAverages& baseline_b);

}  // namespace avl
