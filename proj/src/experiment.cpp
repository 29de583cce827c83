#include "avl/bench/experiment.hpp"

#include <algorithm>
#include <future>
#include <span>
#include <string_view>

#include "avl/avl_tree.hpp"
#include "avl/bench/random.hpp"
#include "avl/validate.hpp"

namespace avl::bench {

namespace {

// Stream purposes for derive_seed.
constexpr std::uint64_t kSampleStream = 1;
constexpr std::uint64_t kIterationStream = 2;

struct Recorder {
  StrategyTally* tally;

  template <class NodeType>
  void operator()(const RotationEvent& event, const NodeType&) const noexcept {
    tally->record(event);
  }
};

}  // namespace

const StrategyRow* BenchmarkReport::row(ReplacementStrategy strategy) const {
  const auto it = std::find_if(rows.begin(), rows.end(),
                               [strategy](const StrategyRow& r) { return r.tally.strategy == strategy; });
  return it == rows.end() ? nullptr : &*it;
}

void check_config(const Corpus& corpus, const ExperimentConfig& config) {
  if (corpus.words.empty()) throw PreconditionError("corpus is empty");
  if (config.iterations == 0) throw PreconditionError("iterations must be positive");
  if (config.strategies.empty()) throw PreconditionError("at least one strategy is required");
  for (std::size_t i = 0; i < config.strategies.size(); ++i) {
    for (std::size_t j = i + 1; j < config.strategies.size(); ++j) {
      if (config.strategies[i] == config.strategies[j]) throw PreconditionError("strategy listed twice");
    }
  }
  if (config.sample_size) {
    if (*config.sample_size == 0) throw PreconditionError("sample size must be positive");
    if (*config.sample_size > corpus.words.size()) {
      throw PreconditionError("sample size " + std::to_string(*config.sample_size) + " exceeds corpus size " +
                              std::to_string(corpus.words.size()));
    }
  }
}

std::vector<std::string> select_words(const Corpus& corpus, const ExperimentConfig& config) {
  if (!config.sample_size) return corpus.words;
  std::vector<std::string> words = corpus.words;
  Xoshiro256StarStar rng(derive_seed(config.seed, kSampleStream, 0));
  seeded_shuffle(std::span(words), rng);
  words.resize(*config.sample_size);
  return words;
}

StrategyTally run_strategy(const std::vector<std::string>& words, ReplacementStrategy strategy,
                           std::uint64_t iterations, std::uint64_t seed) {
  StrategyTally tally;
  tally.strategy = strategy;
  const std::vector<std::string_view> base(words.begin(), words.end());
  std::vector<std::string_view> order;
  Recorder recorder{&tally};

  for (std::uint64_t iteration = 0; iteration < iterations; ++iteration) {
    Xoshiro256StarStar rng(derive_seed(seed, kIterationStream, iteration));
    AvlTree<std::string_view> tree;

    order = base;
    seeded_shuffle(std::span(order), rng);
    for (const auto word : order) {
      if (!tree.insert(word, {}, recorder).inserted) {
        throw StructuralError("duplicate word during insert phase: " + std::string(word));
      }
    }
    if (const auto report = validate(tree); !report.ok()) {
      throw StructuralError("tree invalid after insert phase: " + report.violations.front().detail);
    }

    seeded_shuffle(std::span(order), rng);
    for (const auto word : order) {
      if (!tree.erase(word, strategy, recorder).erased) {
        throw StructuralError("word missing during delete phase: " + std::string(word));
      }
    }
    if (!tree.empty() || tree.root() != nullptr) {
      throw StructuralError("tree not empty after delete phase");
    }
    ++tally.iterations;
  }
  return tally;
}

BenchmarkReport run_experiment(const Corpus& corpus, const ExperimentConfig& config) {
  check_config(corpus, config);
  const auto words = select_words(corpus, config);

  std::vector<StrategyTally> tallies;
  if (config.parallel && config.strategies.size() > 1) {
    std::vector<std::future<StrategyTally>> pending;
    for (auto strategy : config.strategies) {
      pending.push_back(std::async(std::launch::async, [&words, strategy, &config] {
        return run_strategy(words, strategy, config.iterations, config.seed);
      }));
    }
    for (auto& result : pending) tallies.push_back(result.get());
  } else {
    for (auto strategy : config.strategies) {
      tallies.push_back(run_strategy(words, strategy, config.iterations, config.seed));
    }
  }

  BenchmarkReport report;
  report.config = {config.seed, config.iterations, corpus.sha256, config.sample_size, words.size()};
  for (const auto& tally : tallies) {
    const auto means = average(tally);
    report.rows.push_back({tally, means.insert, means.deletion});
  }

  const auto* left = report.row(ReplacementStrategy::RightmostOfLeft);
  const auto* right = report.row(ReplacementStrategy::LeftmostOfRight);
  const auto* optimum = report.row(ReplacementStrategy::Optimum);
  if (left != nullptr && right != nullptr && optimum != nullptr) {
    try {
      report.percentages = percentage_row(optimum->delete_average, left->delete_average, right->delete_average);
    } catch (const DegenerateBaselineError&) {
      // Tiny corpora can leave a column without any rotation at all.
      report.percentages.reset();
    }
  }
  return report;
}

}  // namespace avl::bench
