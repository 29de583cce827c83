// avl: run the rotation-count benchmark, the differential self-check, or a
// single-deletion trace.

#include <charconv>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "avl/avl_tree.hpp"
#include "avl/bench/check.hpp"
#include "avl/bench/corpus.hpp"
#include "avl/bench/experiment.hpp"
#include "avl/bench/report.hpp"
#include "avl/print.hpp"
#include "avl/validate.hpp"

namespace {

struct BenchArgs {
  std::string corpus;
  std::uint64_t iterations = 100;
  std::uint64_t seed = 1;
  std::string strategy = "all";
  std::optional<std::size_t> sample_size;
  std::string format = "table";
  bool sequential = false;
};

struct CheckArgs {
  std::size_t ops = 10'000;
  std::uint64_t seed = 1;
  std::int64_t key_space = 1'000;
};

struct DemoArgs {
  std::string keys = "4,2,5,1,3";
  std::int64_t target = 4;
  std::string strategy = "optimum";
};

int run_bench(const BenchArgs& args) {
  const auto corpus = avl::bench::load_corpus(args.corpus);
  avl::bench::ExperimentConfig config;
  config.iterations = args.iterations;
  config.seed = args.seed;
  config.sample_size = args.sample_size;
  config.parallel = !args.sequential;
  if (args.strategy != "all") config.strategies = {avl::parse_strategy(args.strategy)};

  const auto format = avl::bench::parse_format(args.format);
  const auto report = avl::bench::run_experiment(corpus, config);
  std::cout << avl::bench::render_report(report, format);
  return 0;
}

int run_check(const CheckArgs& args) {
  avl::bench::CheckOptions options;
  options.operations = args.ops;
  options.seed = args.seed;
  options.key_space = args.key_space;
  const auto result = avl::bench::run_check(options);
  std::cout << fmt::format("{} operations ({} inserts, {} deletes, {} searches), max height {}\n",
                           result.operations_run, result.inserts, result.deletes, result.searches, result.max_height);
  if (!result.ok()) {
    std::cerr << "divergence: " << *result.failure << '\n';
    return 1;
  }
  std::cout << "ok: no divergence from the reference model, all invariants held\n";
  return 0;
}

std::vector<std::int64_t> parse_keys(const std::string& text) {
  std::vector<std::int64_t> keys;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string_view item(text.data() + start, end - start);
    std::int64_t key = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), key);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw avl::PreconditionError("malformed key list: '" + text + "'");
    }
    keys.push_back(key);
    start = end + 1;
  }
  return keys;
}

int run_demo(const DemoArgs& args) {
  const auto keys = parse_keys(args.keys);
  const auto strategy = avl::parse_strategy(args.strategy);

  avl::AvlTree<std::int64_t> tree;
  for (const auto key : keys) {
    const auto result = tree.insert(key);
    std::cout << fmt::format("insert {}: {}", key, result.inserted ? "added" : "already present");
    for (const auto& event : result.rotations) std::cout << ' ' << avl::to_string(event.kind);
    std::cout << '\n';
  }
  std::cout << "\nbefore deleting " << args.target << ":\n" << avl::format_tree(tree);

  const auto* target = tree.find(args.target);
  if (target == nullptr) {
    std::cout << "\n" << args.target << " not present\n";
    return 0;
  }

  const auto ordered = tree.in_order();
  const auto position = std::lower_bound(ordered.begin(), ordered.end(), args.target) - ordered.begin();
  const int balance = target->balance.value();
  const bool two_children = target->left && target->right;

  const auto result = tree.erase(args.target, strategy);
  std::cout << fmt::format("\ndelete {} with strategy {} (node balance {:+d})\n", args.target, avl::to_string(strategy),
                           balance);
  if (result.replacement) {
    const bool left = *result.replacement == avl::Direction::Left;
    const auto replacement = ordered[static_cast<std::size_t>(left ? position - 1 : position + 1)];
    std::cout << fmt::format("replacement direction: {} ({} of {} subtree, key {})\n",
                             left ? "Left" : "Right", left ? "rightmost" : "leftmost", left ? "left" : "right",
                             replacement);
  } else {
    std::cout << fmt::format("replacement direction: none (node had {} child)\n", two_children ? "two" : "at most one");
  }
  if (result.rotations.empty()) {
    std::cout << "rotations: none\n";
  } else {
    std::cout << "rotations:";
    for (const auto& event : result.rotations) std::cout << ' ' << avl::to_string(event.kind);
    std::cout << fmt::format(" ({})\n", result.rotations.size());
  }
  std::cout << "\nafter:\n" << avl::format_tree(tree);

  if (const auto report = avl::validate(tree); !report.ok()) {
    std::cerr << "invariant violated: " << report.violations.front().detail << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AVL deletion strategies: rotation-count benchmark and tools"};
  app.require_subcommand(1);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run the shuffle-insert/shuffle-delete rotation experiment");
  bench_cmd->add_option("--corpus", bench.corpus, "Word list, one word per line")->required();
  bench_cmd->add_option("--iterations", bench.iterations, "Insert/delete cycles per strategy")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "Master seed");
  bench_cmd->add_option("--strategy", bench.strategy, "Replacement strategy")
      ->check(CLI::IsMember({"rightmost", "leftmost", "optimum", "all"}));
  bench_cmd->add_option("--sample-size", bench.sample_size, "Use a seeded sample of K words")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--format", bench.format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  bench_cmd->add_flag("--sequential", bench.sequential, "Run strategies one after another on one thread");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Differential self-check against a reference map");
  check_cmd->add_option("--ops", check.ops, "Number of random operations")->check(CLI::PositiveNumber);
  check_cmd->add_option("--seed", check.seed, "Seed");
  check_cmd->add_option("--key-space", check.key_space, "Keys are drawn from [0, N)")->check(CLI::PositiveNumber);

  DemoArgs demo;
  auto* demo_cmd = app.add_subcommand("demo", "Trace one deletion under a chosen strategy");
  demo_cmd->add_option("--keys", demo.keys, "Comma-separated integer keys, inserted in order");
  demo_cmd->add_option("--delete", demo.target, "Key to delete");
  demo_cmd->add_option("--strategy", demo.strategy, "Replacement strategy")
      ->check(CLI::IsMember({"rightmost", "leftmost", "optimum"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*bench_cmd) return run_bench(bench);
    if (*check_cmd) return run_check(check);
    if (*demo_cmd) return run_demo(demo);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  }
  return 1;
}
