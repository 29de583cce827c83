#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "avl/bench/corpus.hpp"
#include "avl/instrumentation.hpp"
#include "avl/types.hpp"

namespace avl::bench {

struct ExperimentConfig {
  std::uint64_t iterations = 100;
  std::uint64_t seed = 1;
  std::vector<ReplacementStrategy> strategies{std::begin(kAllStrategies), std::end(kAllStrategies)};
  std::optional<std::size_t> sample_size;
  // Run strategies on worker threads. Output is identical either way.
  bool parallel = true;
};

/// Inputs echoed into every report so results can be traced to their source.
struct ConfigEcho {
  std::uint64_t seed = 0;
  std::uint64_t iterations = 0;
  std::string corpus_sha256;
  std::optional<std::size_t> sample_size;
  std::size_t word_count = 0;  // words actually inserted per iteration

  friend bool operator==(const ConfigEcho&, const ConfigEcho&) = default;
};

struct StrategyRow {
  StrategyTally tally;
  RotationAverages insert_average;
  RotationAverages delete_average;

  friend bool operator==(const StrategyRow&, const StrategyRow&) = default;
};

struct BenchmarkReport {
  ConfigEcho config;
  std::vector<StrategyRow> rows;
  // Present only when all three strategies ran.
  std::optional<PercentageRow> percentages;

  [[nodiscard]] const StrategyRow* row(ReplacementStrategy strategy) const;

  friend bool operator==(const BenchmarkReport&, const BenchmarkReport&) = default;
};

/// Throws PreconditionError for an unusable configuration.
void check_config(const Corpus& corpus, const ExperimentConfig& config);

/// Words used by a run: the full corpus, or the first sample_size words of a
/// seeded shuffle of it.
std::vector<std::string> select_words(const Corpus& corpus, const ExperimentConfig& config);

/// One strategy over all iterations. Each iteration starts from an empty
/// tree, inserts every word in shuffled order, then deletes every word in a
/// second shuffled order. The shuffles depend only on (seed, iteration), so
/// every strategy sees the same workload. Throws StructuralError if the tree
/// fails validation after the insert phase or is not empty after deletion.
StrategyTally run_strategy(const std::vector<std::string>& words, ReplacementStrategy strategy,
                           std::uint64_t iterations, std::uint64_t seed);

BenchmarkReport run_experiment(const Corpus& corpus, const ExperimentConfig& config);

}  // namespace avl::bench
