#pragma once

#include <vector>

#include "central/semigroup.hpp"

namespace central {

/// Minimal one-sided ideals, the kernel K(S) and the idempotents of a finite
/// semigroup. Every list is sorted by lex_less.
struct IdealStructure {
  std::vector<ElementSet> minimal_left_ideals;
  std::vector<ElementSet> minimal_right_ideals;
  ElementSet kernel;
  ElementSet idempotents;
  ElementSet minimal_idempotents;
};

/// {a} ∪ S·a, the left ideal generated by a in S¹.
ElementSet principal_left_ideal(const FiniteSemigroup& s, Element a);
/// {a} ∪ a·S.
ElementSet principal_right_ideal(const FiniteSemigroup& s, Element a);

ElementSet idempotents(const FiniteSemigroup& s);

IdealStructure ideal_structure(const FiniteSemigroup& s);

}  // namespace central
