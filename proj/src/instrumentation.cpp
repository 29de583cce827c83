#include "avl/instrumentation.hpp"

#include <cmath>
#include <string>

namespace avl {

void StrategyTally::merge(const StrategyTally& other) {
  if (other.strategy != strategy) {
    throw PreconditionError("cannot merge tallies of different strategies");
  }
  insert_counters += other.insert_counters;
  delete_counters += other.delete_counters;
  iterations += other.iterations;
}

RotationAverages average(const RotationCounters& totals, std::uint64_t iterations) {
  if (iterations == 0) throw PreconditionError("average: iteration count must be positive");
  const auto n = static_cast<double>(iterations);
  const auto means = to_averages(totals);
  return {means.ll / n, means.lr / n, means.rl / n, means.rr / n};
}

TallyAverages average(const StrategyTally& tally) {
  return {average(tally.insert_counters, tally.iterations), average(tally.delete_counters, tally.iterations)};
}

std::array<long, 5> PercentageRow::rounded() const {
  return {std::lround(ll), std::lround(lr), std::lround(rl), std::lround(rr), std::lround(sum)};
}

namespace {

double column_percentage(double optimum, double a, double b, const char* column) {
  const double baseline = (a + b) / 2.0;
  if (!(baseline > 0.0)) {
    throw DegenerateBaselineError(std::string("percentage_row: zero baseline in column ") + column);
  }
  return 100.0 * optimum / baseline;
}

}  // namespace

PercentageRow percentage_row(const RotationAverages& optimum, const RotationAverages& baseline_a,
                             const RotationAverages& baseline_b) {
  return {
      column_percentage(optimum.ll, baseline_a.ll, baseline_b.ll, "LL"),
      column_percentage(optimum.lr, baseline_a.lr, baseline_b.lr, "LR"),
      column_percentage(optimum.rl, baseline_a.rl, baseline_b.rl, "RL"),
      column_percentage(optimum.rr, baseline_a.rr, baseline_b.rr, "RR"),
      column_percentage(optimum.sum(), baseline_a.sum(), baseline_b.sum(), "Sum"),
  };
}

}  // namespace avl
