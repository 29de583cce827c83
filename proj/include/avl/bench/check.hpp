#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "avl/avl_map.hpp"

namespace avl::bench {

using CheckMap = AvlMap<std::int64_t, std::int64_t>;

struct CheckOptions {
  std::size_t operations = 10'000;
  std::uint64_t seed = 1;
  std::int64_t key_space = 1'000;
  // Called after every mutation, before validation. Tests use it to plant faults.
  std::function<void(CheckMap&, std::size_t)> after_mutation;
};

struct CheckResult {
  std::size_t operations_run = 0;
  std::size_t inserts = 0;
  std::size_t deletes = 0;
  std::size_t searches = 0;
  std::size_t max_height = 0;
  // First divergence or invariant violation, if any.
  std::optional<std::string> failure;

  [[nodiscard]] bool ok() const noexcept { return !failure; }
};

/// Differential run: random insert/delete/search operations applied to both an
/// AvlMap and std::map, with full validation and content comparison after each
/// mutation. Stops at the first divergence.
CheckResult run_check(const CheckOptions& options);

}  // namespace avl::bench
