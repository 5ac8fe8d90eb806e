#include "central/largeness.hpp"

#include "central/combinatorics.hpp"

namespace central {

namespace {

ElementSet from_indices(std::size_t n, const std::vector<std::size_t>& pick) {
  ElementSet out(n);
  for (auto i : pick) out.insert(static_cast<Element>(i));
  return out;
}

}  // namespace

ElementSet shift_set(const FiniteSemigroup& s, const ElementSet& a, Element x) {
  s.check_element(x);
  s.check_set(a);
  ElementSet out(s.order());
  for (Element t = 0; t < s.order(); ++t) {
    if (a.contains(s(x, t))) out.insert(t);
  }
  return out;
}

ElementSet inverse_image(const FiniteSemigroup& s, const ElementSet& shifts,
                         const ElementSet& a) {
  s.check_set(shifts);
  s.check_set(a);
  ElementSet out(s.order());
  const auto gs = shifts.members();
  for (Element t = 0; t < s.order(); ++t) {
    for (Element g : gs) {
      if (a.contains(s(g, t))) {
        out.insert(t);
        break;
      }
    }
  }
  return out;
}

ElementSet left_orbit(const FiniteSemigroup& s, Element x) {
  s.check_element(x);
  ElementSet out(s.order());
  for (Element y = 0; y < s.order(); ++y) out.insert(s(y, x));
  return out;
}

std::optional<ElementSet> syndetic_witness(const FiniteSemigroup& s,
                                           const ElementSet& a) {
  s.check_set(a);
  if (a.empty()) return std::nullopt;
  const auto all = s.all();
  std::optional<ElementSet> found;
  for_each_subset_by_size(s.order(), [&](const std::vector<std::size_t>& pick) {
    auto g = from_indices(s.order(), pick);
    if (inverse_image(s, g, a) == all) {
      found = std::move(g);
      return true;
    }
    return false;
  });
  return found;
}

std::optional<PiecewiseSyndeticWitness> piecewise_syndetic_witness(
    const FiniteSemigroup& s, const ElementSet& a) {
  s.check_set(a);
  if (a.empty()) return std::nullopt;
  std::vector<ElementSet> orbits;
  for (Element x = 0; x < s.order(); ++x) orbits.push_back(left_orbit(s, x));
  std::optional<PiecewiseSyndeticWitness> found;
  for_each_subset_by_size(s.order(), [&](const std::vector<std::size_t>& pick) {
    auto g = from_indices(s.order(), pick);
    auto target = inverse_image(s, g, a);
    for (Element x = 0; x < s.order(); ++x) {
      if (orbits[x].is_subset_of(target)) {
        found = PiecewiseSyndeticWitness{std::move(g), x};
        return true;
      }
    }
    return false;
  });
  return found;
}

LargenessProfile largeness_profile(const FiniteSemigroup& s,
                                   const ElementSet& a) {
  return largeness_profile(s, ideal_structure(s), a);
}

LargenessProfile largeness_profile(const FiniteSemigroup& s,
                                   const IdealStructure& ideals,
                                   const ElementSet& a) {
  s.check_set(a);
  LargenessProfile out;
  if (a.empty()) return out;
  for (Element t = 0; t < s.order(); ++t) {
    if (left_orbit(s, t).is_subset_of(a)) {
      out.thick = t;
      break;
    }
  }
  out.syndetic = syndetic_witness(s, a);
  out.piecewise_syndetic = piecewise_syndetic_witness(s, a);
  for (Element e : ideals.minimal_idempotents.members()) {
    if (a.contains(e)) {
      out.central = e;
      break;
    }
  }
  return out;
}

bool is_central(const FiniteSemigroup& s, const ElementSet& a) {
  s.check_set(a);
  return ideal_structure(s).minimal_idempotents.intersects(a);
}

ShiftSpectrum central_shift_spectrum(const FiniteSemigroup& s,
                                     const ElementSet& a) {
  s.check_set(a);
  const auto ideals = ideal_structure(s);
  ShiftSpectrum out;
  out.spectrum = ElementSet(s.order());
  for (Element x = 0; x < s.order(); ++x) {
    if (ideals.minimal_idempotents.intersects(shift_set(s, a, x))) {
      out.spectrum.insert(x);
    }
  }
  out.piecewise_syndetic = piecewise_syndetic_witness(s, a).has_value();
  out.spectrum_syndetic = syndetic_witness(s, out.spectrum).has_value();
  out.spectrum_nonempty = !out.spectrum.empty();
  return out;
}

}  // namespace central
