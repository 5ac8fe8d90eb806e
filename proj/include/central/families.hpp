#pragma once

// Families of subsets of a finite semigroup: good families and
// collectionwise piecewise syndeticity, with the kernel-intersection test
// as an independent oracle for the latter.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "central/semigroup.hpp"

namespace central {

class SetFamily {
 public:
  /// Throws EmptyInput for an empty list, ElementOutOfRange for sets of the
  /// wrong order and TooLarge beyond 16 sets.
  SetFamily(FiniteSemigroup parent, std::vector<ElementSet> sets);

  const FiniteSemigroup& parent() const noexcept { return parent_; }
  const std::vector<ElementSet>& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }
  /// ⋂ of the sets selected by `mask` (bit i selects set i).
  ElementSet intersection(std::uint64_t mask) const;
  std::uint64_t full_mask() const noexcept {
    return (std::uint64_t{1} << sets_.size()) - 1;
  }

 private:
  FiniteSemigroup parent_;
  std::vector<ElementSet> sets_;
};

/// Nonempty subfamily masks by size, then lexicographically.
std::vector<std::uint64_t> subfamilies_by_size(std::size_t n);

struct GoodFamilyReport {
  bool good = false;
  /// For each i and x ∈ C_i (increasing), the least j with x·C_j ⊆ C_i.
  std::vector<std::vector<std::pair<Element, std::size_t>>> choices;
  std::optional<std::pair<std::size_t, Element>> violation;  // (i, x)
  std::optional<std::uint64_t> empty_subfamily;             // least by size
};

GoodFamilyReport is_good_family(const SetFamily& fam);

/// G on every nonempty subfamily plus the anchor α; χ(ℋ, F) = α for all
/// ℋ and F.
struct CwpwsWitness {
  Element alpha = 0;
  std::vector<std::pair<std::uint64_t, ElementSet>> shifts;  // (ℱ, G(ℱ))

  Element chi(std::uint64_t /*subfamily*/, const ElementSet& /*f*/) const {
    return alpha;
  }
  const ElementSet& shifts_for(std::uint64_t subfamily) const;
};

struct CwpwsViolation {
  ElementSet f;
  std::uint64_t outer = 0;  // ℋ
  std::uint64_t inner = 0;  // ℱ ⊆ ℋ
  Element product = 0;      // an element of F·χ(ℋ, F) outside G(ℱ)⁻¹(⋂ℱ)
};

/// Checks F·χ(ℋ, F) ⊆ G(ℱ)⁻¹(⋂ℱ) for every nonempty F ⊆ S and all
/// nonempty ℱ ⊆ ℋ. Throws TooLarge when that exceeds ~10⁸ checks.
std::optional<CwpwsViolation> verify_cwpws(const SetFamily& fam,
                                           const CwpwsWitness& w);

struct CwpwsReport {
  bool cwpws = false;
  std::optional<CwpwsWitness> witness;
  /// Set on refutation: a subfamily whose intersection is empty, if any.
  std::optional<std::uint64_t> empty_subfamily;
  std::string refutation;
  bool oracle = false;  // K(S) ∩ ⋂𝒜 ≠ ∅
  bool agree = false;
};

/// Least α admitting G(ℱ) with S·α ⊆ G(ℱ)⁻¹(⋂ℱ) for every nonempty ℱ,
/// each G(ℱ) least by witness_less. Every emitted witness passes
/// verify_cwpws or VerificationFailed is thrown.
CwpwsReport cwpws_check(const SetFamily& fam);

std::string subfamily_text(std::uint64_t mask);

}  // namespace central
