#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "central/semigroup.hpp"

namespace central {

using Value = std::int64_t;

/// The semigroup in which products of sequences and trees are evaluated:
/// a finite Cayley table, (ℕ,+) or (ℕ,·). ℕ arithmetic is overflow-checked.
class Ambient {
 public:
  enum class Kind { finite, additive, multiplicative };

  static Ambient finite(FiniteSemigroup s);
  static Ambient additive() { return Ambient(Kind::additive, nullptr); }
  static Ambient multiplicative() { return Ambient(Kind::multiplicative, nullptr); }

  Kind kind() const noexcept { return kind_; }
  std::string name() const;

  bool is_element(Value x) const noexcept;
  /// Throws ElementOutOfRange for non-elements and Overflow when ℕ
  /// arithmetic leaves int64.
  Value product(Value a, Value b) const;
  Value operator()(Value a, Value b) const { return product(a, b); }

  /// The conventional space-filler: the first element (0 for a finite
  /// table, 1 for ℕ).
  Value first_element() const noexcept {
    return kind_ == Kind::finite ? 0 : 1;
  }

  /// Only valid when kind() == finite.
  const FiniteSemigroup& table() const;

 private:
  Ambient(Kind kind, std::shared_ptr<const FiniteSemigroup> table)
      : kind_(kind), table_(std::move(table)) {}

  Kind kind_;
  std::shared_ptr<const FiniteSemigroup> table_;
};

}  // namespace central
