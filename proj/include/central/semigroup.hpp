#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace central {

using Element = std::uint32_t;

/// A subset of the elements of a finite semigroup of a fixed order.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t order) : bits_(order, false) {}
  ElementSet(std::size_t order, std::initializer_list<Element> members);
  ElementSet(std::size_t order, std::span<const Element> members);

  static ElementSet full(std::size_t order);
  /// Bit i of `mask` selects element i. Requires order <= 64.
  static ElementSet from_mask(std::size_t order, std::uint64_t mask);

  std::size_t order() const noexcept { return bits_.size(); }
  bool contains(Element x) const noexcept {
    return x < bits_.size() && bits_[x];
  }
  void insert(Element x);
  void erase(Element x);

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  std::vector<Element> members() const;
  std::uint64_t mask() const;

  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;
  ElementSet intersection(const ElementSet& other) const;
  ElementSet union_with(const ElementSet& other) const;
  ElementSet complement() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<bool> bits_;
};

/// Order on sets by their sorted member lists.
bool lex_less(const ElementSet& a, const ElementSet& b);
/// Order used for "least" witnesses: cardinality first, then lex_less.
bool witness_less(const ElementSet& a, const ElementSet& b);

/// An associative Cayley table on {0, ..., n-1}; table(i, j) = i·j.
class FiniteSemigroup {
 public:
  /// Validates dimensions, index range and associativity over all n³
  /// triples. Throws InvariantViolation, IndexOutOfRange or NonAssociative.
  static FiniteSemigroup load(std::size_t order,
                              const std::vector<std::vector<Element>>& table,
                              std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }
  Element product(Element a, Element b) const noexcept {
    return table_[a * order_ + b];
  }
  Element operator()(Element a, Element b) const noexcept {
    return product(a, b);
  }
  /// Row-major copy of the table.
  const std::vector<Element>& table() const noexcept { return table_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  ElementSet all() const { return ElementSet::full(order_); }
  /// Throws ElementOutOfRange unless x < order().
  void check_element(Element x) const;
  void check_set(const ElementSet& a) const;

  friend bool operator==(const FiniteSemigroup&,
                         const FiniteSemigroup&) = default;

 private:
  FiniteSemigroup(std::size_t order, std::vector<Element> table,
                  std::vector<std::string> labels)
      : order_(order), table_(std::move(table)), labels_(std::move(labels)) {}

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<std::string> labels_;
};

/// Cayley-table text: line 1 = n; then n rows of n space-separated indices;
/// optional trailing "# labels: a b c". Canonical output round-trips exactly.
std::string to_cayley_text(const FiniteSemigroup& s);
FiniteSemigroup parse_cayley(std::string_view text);
FiniteSemigroup read_cayley_file(const std::filesystem::path& path);

}  // namespace central
