#include <gtest/gtest.h>

#include <string>

#include "avl/bench/experiment.hpp"

namespace avl::bench {
namespace {

Corpus small_corpus(std::size_t words) {
  std::string text;
  for (std::size_t i = 0; i < words; ++i) text += "w" + std::to_string(i * 7919 % 100003) + "\n";
  return parse_corpus(text);
}

TEST(RunExperiment, SingleWordNeverRotates) {
  const auto corpus = parse_corpus("lonely\n");
  ExperimentConfig config;
  config.iterations = 1;
  const auto report = run_experiment(corpus, config);
  ASSERT_EQ(report.rows.size(), 3u);
  for (const auto& row : report.rows) {
    EXPECT_EQ(row.tally.insert_counters, RotationCounters{});
    EXPECT_EQ(row.tally.delete_counters, RotationCounters{});
    EXPECT_EQ(row.tally.iterations, 1u);
  }
  // Every baseline column is zero, so there is no percentage row.
  EXPECT_FALSE(report.percentages.has_value());
}

TEST(RunExperiment, DeterministicAndIndependentOfThreading) {
  const auto corpus = small_corpus(800);
  ExperimentConfig config;
  config.iterations = 5;
  config.seed = 77;
  const auto first = run_experiment(corpus, config);
  const auto second = run_experiment(corpus, config);
  EXPECT_EQ(first, second);

  config.parallel = false;
  EXPECT_EQ(run_experiment(corpus, config), first);
}

TEST(RunExperiment, StrategiesShareInsertWorkload) {
  const auto corpus = small_corpus(1500);
  ExperimentConfig config;
  config.iterations = 4;
  const auto report = run_experiment(corpus, config);
  ASSERT_EQ(report.rows.size(), 3u);
  const auto& insert = report.rows[0].tally.insert_counters;
  EXPECT_GT(insert.sum(), 0u);
  for (const auto& row : report.rows) EXPECT_EQ(row.tally.insert_counters, insert);
  ASSERT_TRUE(report.percentages.has_value());
}

TEST(RunExperiment, SingleStrategyMatchesItsRowInFullRun) {
  const auto corpus = small_corpus(600);
  ExperimentConfig all;
  all.iterations = 3;
  const auto full = run_experiment(corpus, all);

  ExperimentConfig only = all;
  only.strategies = {ReplacementStrategy::Optimum};
  const auto single = run_experiment(corpus, only);
  ASSERT_EQ(single.rows.size(), 1u);
  EXPECT_EQ(single.rows[0], *full.row(ReplacementStrategy::Optimum));
  EXPECT_FALSE(single.percentages.has_value());
}

TEST(RunExperiment, AveragesAreTotalsOverIterations) {
  const auto corpus = small_corpus(500);
  ExperimentConfig config;
  config.iterations = 7;
  const auto report = run_experiment(corpus, config);
  for (const auto& row : report.rows) {
    EXPECT_DOUBLE_EQ(row.delete_average.ll, static_cast<double>(row.tally.delete_counters.ll) / 7.0);
    EXPECT_DOUBLE_EQ(row.delete_average.sum(), static_cast<double>(row.tally.delete_counters.sum()) / 7.0);
  }
  EXPECT_EQ(report.config.iterations, 7u);
  EXPECT_EQ(report.config.word_count, 500u);
  EXPECT_EQ(report.config.corpus_sha256, corpus.sha256);
}

TEST(RunExperiment, SampleIsSeededPrefixOfShuffledCorpus) {
  const auto corpus = small_corpus(1000);
  ExperimentConfig config;
  config.sample_size = 250;
  const auto words = select_words(corpus, config);
  ASSERT_EQ(words.size(), 250u);
  EXPECT_EQ(words, select_words(corpus, config));
  config.seed = 2;
  EXPECT_NE(words, select_words(corpus, config));

  config.iterations = 2;
  const auto report = run_experiment(corpus, config);
  EXPECT_EQ(report.config.word_count, 250u);
  EXPECT_EQ(report.config.sample_size, 250u);
}

TEST(RunExperiment, RejectsBadConfiguration) {
  const auto corpus = small_corpus(10);
  ExperimentConfig config;
  config.iterations = 0;
  EXPECT_THROW(run_experiment(corpus, config), PreconditionError);

  config = {};
  config.strategies.clear();
  EXPECT_THROW(run_experiment(corpus, config), PreconditionError);

  config = {};
  config.sample_size = 11;
  EXPECT_THROW(run_experiment(corpus, config), PreconditionError);

  config = {};
  config.strategies = {ReplacementStrategy::Optimum, ReplacementStrategy::Optimum};
  EXPECT_THROW(run_experiment(corpus, config), PreconditionError);

  EXPECT_THROW(run_experiment(Corpus{}, ExperimentConfig{}), PreconditionError);
}

}  // namespace
}  // namespace avl::bench
