#pragma once

// Finite trees of sequences over a semigroup, their branch sets B_f and
// finite-product sets P_f, and the two closure conditions that make a tree
// an FP-tree or a *-tree.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "central/ambient.hpp"

namespace central {

using Node = std::vector<Value>;

std::string to_string(const Node& f);

class FiniteTree {
 public:
  /// Throws InvariantViolation("root") without the empty sequence,
  /// InvariantViolation("prefix-closed") when a node's parent is missing and
  /// ElementOutOfRange for entries outside the carrier.
  FiniteTree(Ambient carrier, std::set<Node> nodes);

  const Ambient& carrier() const noexcept { return carrier_; }
  const std::set<Node>& nodes() const noexcept { return nodes_; }
  bool contains(const Node& f) const { return nodes_.count(f) != 0; }
  std::size_t size() const noexcept { return nodes_.size(); }
  /// Length of the longest node.
  std::size_t depth() const noexcept { return depth_; }

  /// B_f = {x : f⌢x ∈ T}, increasing. Throws NodeNotInTree.
  const std::vector<Value>& branch(const Node& f) const;

 private:
  Ambient carrier_;
  std::set<Node> nodes_;
  std::map<Node, std::vector<Value>> children_;
  std::size_t depth_ = 0;
};

/// FP of the entries f(i) for i in [from, f.size()), products taken with
/// indices increasing. Empty when the range is empty.
std::vector<Value> finite_products(const Ambient& carrier, const Node& f,
                                   std::size_t from = 0);

struct BranchProducts {
  std::vector<Value> branch;                       // B_f
  std::vector<Value> products;                     // P_f
  std::optional<std::vector<Value>> tail_products;  // P_{g−f}
};

/// Throws NodeNotInTree, and NotAnExtension unless f is a proper initial
/// segment of g.
BranchProducts branch_and_products(const FiniteTree& t, const Node& f,
                                   const std::optional<Node>& g = std::nullopt);

/// x ∈ B_f and y ∈ B_{f⌢x} with x·y ∉ B_f.
struct StarFailure {
  Node f;
  Value x = 0;
  Value y = 0;
  Value product = 0;
};

/// An element in exactly one of B_f and ⋃_{f⊊g} P_{g−f}.
struct FpFailure {
  Node f;
  Value element = 0;
  bool in_branch = false;  // true: in B_f but no P_{g−f} produces it
};

struct TreeClassification {
  bool is_star_tree = true;
  bool is_fp_tree = true;
  std::size_t pruned_to_depth = 0;
  std::optional<StarFailure> star_failure;
  std::optional<FpFailure> fp_failure;
};

/// Nodes at the deepest level are exempt from the FP equality, since the
/// truncation records none of their extensions.
TreeClassification classify_tree(const FiniteTree& t);

/// Levels 0..depth with B_∅ = A and B_f = {x ∈ A : P_f·x ⊆ A}. Products
/// that overflow count as outside A. Throws TooLarge past `node_cap` nodes.
FiniteTree build_fp_tree(const Ambient& carrier, const std::vector<Value>& a,
                         std::size_t depth, std::size_t node_cap = 200000);

// Tree file: "carrier <cayley file | additive | multiplicative>", then one
// node per line as space-separated entries; an empty line is the root.
// A relative Cayley path is resolved against `base`.
std::string to_tree_text(const FiniteTree& t, const std::string& carrier_ref);
FiniteTree parse_tree(std::string_view text, const std::filesystem::path& base);
FiniteTree read_tree_file(const std::filesystem::path& path);

}  // namespace central
