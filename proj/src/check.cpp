#include "avl/bench/check.hpp"

#include <map>
#include <vector>

#include <fmt/format.h>

#include "avl/bench/random.hpp"
#include "avl/validate.hpp"

namespace avl::bench {

namespace {

constexpr std::uint64_t kCheckStream = 3;

std::string show(const std::optional<std::int64_t>& value) {
  return value ? std::to_string(*value) : "absent";
}

std::optional<std::string> compare_contents(const CheckMap& map, const std::map<std::int64_t, std::int64_t>& model) {
  std::vector<std::pair<std::int64_t, std::int64_t>> actual;
  actual.reserve(map.size());
  map.for_each([&actual](std::int64_t key, std::int64_t value) { actual.emplace_back(key, value); });
  if (actual.size() != model.size()) {
    return fmt::format("size {} but reference holds {}", actual.size(), model.size());
  }
  auto expected = model.begin();
  for (const auto& [key, value] : actual) {
    if (key != expected->first || value != expected->second) {
      return fmt::format("entry ({}, {}) where reference has ({}, {})", key, value, expected->first,
                         expected->second);
    }
    ++expected;
  }
  return std::nullopt;
}

}  // namespace

CheckResult run_check(const CheckOptions& options) {
  CheckResult result;
  CheckMap map;
  std::map<std::int64_t, std::int64_t> model;
  Xoshiro256StarStar rng(derive_seed(options.seed, kCheckStream, 0));
  const auto key_space = static_cast<std::uint64_t>(std::max<std::int64_t>(options.key_space, 1));

  for (std::size_t index = 0; index < options.operations; ++index) {
    const auto roll = uniform_below(rng, 100);
    const auto key = static_cast<std::int64_t>(uniform_below(rng, key_space));
    auto fail = [&](const std::string& what) {
      result.failure = fmt::format("operation {} key {}: {}", index, key, what);
    };

    if (roll < 20) {
      ++result.searches;
      const auto expected = model.find(key) == model.end() ? std::nullopt : std::optional(model.at(key));
      const auto actual = map.get(key);
      if (actual != expected) fail(fmt::format("get returned {}, expected {}", show(actual), show(expected)));
    } else {
      std::optional<std::int64_t> expected;
      std::optional<std::int64_t> actual;
      if (roll < 65) {
        ++result.inserts;
        const auto value = static_cast<std::int64_t>(rng() >> 1);
        if (auto it = model.find(key); it != model.end()) expected = std::exchange(it->second, value);
        else model.emplace(key, value);
        actual = map.insert(key, value);
        if (actual != expected) fail(fmt::format("insert displaced {}, expected {}", show(actual), show(expected)));
      } else {
        ++result.deletes;
        const auto strategy = kAllStrategies[uniform_below(rng, 3)];
        if (auto it = model.find(key); it != model.end()) {
          expected = it->second;
          model.erase(it);
        }
        actual = map.erase(key, strategy);
        if (actual != expected) {
          fail(fmt::format("{} delete removed {}, expected {}", to_string(strategy), show(actual), show(expected)));
        }
      }

      if (options.after_mutation) options.after_mutation(map, index);
      if (!result.failure) {
        const auto report = validate(map.tree());
        result.max_height = std::max(result.max_height, static_cast<std::size_t>(report.height));
        if (!report.ok()) {
          fail(fmt::format("invariant violated after mutation: {}", report.violations.front().detail));
        } else if (auto mismatch = compare_contents(map, model)) {
          fail("contents diverge from reference: " + *mismatch);
        }
      }
    }

    ++result.operations_run;
    if (result.failure) break;
  }
  return result;
}

}  // namespace avl::bench
