#include "central/ideals.hpp"

#include <algorithm>
#include <stdexcept>

namespace central {

namespace {

template <class Generate>
std::vector<ElementSet> inclusion_minimal(std::size_t n, Generate generate) {
  std::vector<ElementSet> principal;
  principal.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    principal.push_back(generate(static_cast<Element>(a)));
  }
  std::vector<ElementSet> minimal;
  for (const auto& candidate : principal) {
    bool is_minimal = std::none_of(
        principal.begin(), principal.end(), [&](const ElementSet& other) {
          return other.is_subset_of(candidate) && !(other == candidate);
        });
    if (is_minimal &&
        std::find(minimal.begin(), minimal.end(), candidate) == minimal.end()) {
      minimal.push_back(candidate);
    }
  }
  std::sort(minimal.begin(), minimal.end(), lex_less);
  return minimal;
}

ElementSet union_of(std::size_t n, const std::vector<ElementSet>& sets) {
  ElementSet out(n);
  for (const auto& s : sets) out = out.union_with(s);
  return out;
}

}  // namespace

ElementSet principal_left_ideal(const FiniteSemigroup& s, Element a) {
  s.check_element(a);
  ElementSet out(s.order());
  out.insert(a);
  for (Element x = 0; x < s.order(); ++x) out.insert(s(x, a));
  return out;
}

ElementSet principal_right_ideal(const FiniteSemigroup& s, Element a) {
  s.check_element(a);
  ElementSet out(s.order());
  out.insert(a);
  for (Element x = 0; x < s.order(); ++x) out.insert(s(a, x));
  return out;
}

ElementSet idempotents(const FiniteSemigroup& s) {
  ElementSet out(s.order());
  for (Element e = 0; e < s.order(); ++e) {
    if (s(e, e) == e) out.insert(e);
  }
  return out;
}

IdealStructure ideal_structure(const FiniteSemigroup& s) {
  const auto n = s.order();
  IdealStructure out;
  out.minimal_left_ideals = inclusion_minimal(
      n, [&](Element a) { return principal_left_ideal(s, a); });
  out.minimal_right_ideals = inclusion_minimal(
      n, [&](Element a) { return principal_right_ideal(s, a); });
  out.kernel = union_of(n, out.minimal_left_ideals);
  if (!(out.kernel == union_of(n, out.minimal_right_ideals))) {
    throw std::logic_error("left and right kernels differ");
  }
  out.idempotents = idempotents(s);
  out.minimal_idempotents = out.idempotents.intersection(out.kernel);
  return out;
}

}  // namespace central
