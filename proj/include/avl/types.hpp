#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace avl {

/// Raised when a tree link required by a rotation or deletion step is missing.
/// Never reachable through the public tree API; indicates an internal logic bug
/// or a hand-built tree handed to a low-level routine.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a caller violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Height of the right subtree minus height of the left subtree.
///
/// At rest every node holds -1, 0 or +1. Rebalancing code may store -2 or +2
/// for the duration of a single rotation call.
class BalanceFactor {
 public:
  constexpr BalanceFactor() noexcept = default;
  constexpr explicit BalanceFactor(int value) noexcept : value_(static_cast<std::int8_t>(value)) {}

  static constexpr BalanceFactor left_heavy() noexcept { return BalanceFactor(-1); }
  static constexpr BalanceFactor even() noexcept { return BalanceFactor(0); }
  static constexpr BalanceFactor right_heavy() noexcept { return BalanceFactor(1); }

  [[nodiscard]] constexpr int value() const noexcept { return value_; }
  [[nodiscard]] constexpr bool at_rest() const noexcept { return value_ >= -1 && value_ <= 1; }

  friend constexpr bool operator==(BalanceFactor, BalanceFactor) noexcept = default;

 private:
  std::int8_t value_ = 0;
};

/// Which node replaces a deleted node that has two children.
enum class ReplacementStrategy : std::uint8_t {
  RightmostOfLeft,  // in-order predecessor
  LeftmostOfRight,  // in-order successor
  Optimum,          // taken from the taller subtree, left on a tie
};

enum class Direction : std::uint8_t { Left, Right };

enum class RotationKind : std::uint8_t { LL, LR, RL, RR };

enum class Phase : std::uint8_t { Insert, Delete };

/// One rotation performed while rebalancing. A double rotation is one event.
struct RotationEvent {
  RotationKind kind;
  Phase phase;

  friend constexpr bool operator==(RotationEvent, RotationEvent) noexcept = default;
};

inline constexpr ReplacementStrategy kAllStrategies[] = {
    ReplacementStrategy::RightmostOfLeft,
    ReplacementStrategy::LeftmostOfRight,
    ReplacementStrategy::Optimum,
};

constexpr std::string_view to_string(RotationKind kind) noexcept {
  switch (kind) {
    case RotationKind::LL: return "LL";
    case RotationKind::LR: return "LR";
    case RotationKind::RL: return "RL";
    case RotationKind::RR: return "RR";
  }
  return "?";
}

constexpr std::string_view to_string(Phase phase) noexcept {
  return phase == Phase::Insert ? "insert" : "delete";
}

constexpr std::string_view to_string(Direction direction) noexcept {
  return direction == Direction::Left ? "left" : "right";
}

/// Short machine name, as used on the command line and in CSV/JSON output.
constexpr std::string_view to_string(ReplacementStrategy strategy) noexcept {
  switch (strategy) {
    case ReplacementStrategy::RightmostOfLeft: return "rightmost";
    case ReplacementStrategy::LeftmostOfRight: return "leftmost";
    case ReplacementStrategy::Optimum: return "optimum";
  }
  return "?";
}

/// Row label used in the human-readable report.
constexpr std::string_view display_name(ReplacementStrategy strategy) noexcept {
  switch (strategy) {
    case ReplacementStrategy::RightmostOfLeft: return "Rightmost of Left";
    case ReplacementStrategy::LeftmostOfRight: return "Leftmost of Right";
    case ReplacementStrategy::Optimum: return "Optimum";
  }
  return "?";
}

/// Inverse of to_string(ReplacementStrategy). Throws PreconditionError on unknown names.
inline ReplacementStrategy parse_strategy(std::string_view name) {
  for (auto strategy : kAllStrategies) {
    if (to_string(strategy) == name) return strategy;
  }
  throw PreconditionError("unknown replacement strategy: " + std::string(name));
}

}  // namespace avl
