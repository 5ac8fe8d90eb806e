#pragma once

#include <optional>

#include "central/ideals.hpp"
#include "central/semigroup.hpp"

namespace central {

struct PiecewiseSyndeticWitness {
  ElementSet shifts;  // G
  Element anchor;     // a with S·a ⊆ G⁻¹A
};

/// The four largeness notions for a subset of a finite semigroup, each as an
/// optional witness. All witnesses are the least ones: elements by index,
/// sets by witness_less.
struct LargenessProfile {
  std::optional<Element> thick;  // t with S·t ⊆ A
  std::optional<ElementSet> syndetic;  // minimal G with S = G⁻¹A
  std::optional<PiecewiseSyndeticWitness> piecewise_syndetic;
  std::optional<Element> central;  // a minimal idempotent in A

  bool is_thick() const { return thick.has_value(); }
  bool is_syndetic() const { return syndetic.has_value(); }
  bool is_piecewise_syndetic() const { return piecewise_syndetic.has_value(); }
  bool is_central() const { return central.has_value(); }
};

/// s⁻¹A = {t : s·t ∈ A}.
ElementSet shift_set(const FiniteSemigroup& s, const ElementSet& a, Element x);

/// G⁻¹A = {t : g·t ∈ A for some g ∈ G}.
ElementSet inverse_image(const FiniteSemigroup& s, const ElementSet& shifts,
                         const ElementSet& a);

/// S·x.
ElementSet left_orbit(const FiniteSemigroup& s, Element x);

LargenessProfile largeness_profile(const FiniteSemigroup& s,
                                   const ElementSet& a);
/// Overload reusing a precomputed ideal structure of `s`.
LargenessProfile largeness_profile(const FiniteSemigroup& s,
                                   const IdealStructure& ideals,
                                   const ElementSet& a);

std::optional<ElementSet> syndetic_witness(const FiniteSemigroup& s,
                                           const ElementSet& a);
std::optional<PiecewiseSyndeticWitness> piecewise_syndetic_witness(
    const FiniteSemigroup& s, const ElementSet& a);

bool is_central(const FiniteSemigroup& s, const ElementSet& a);

/// B = {x : x⁻¹A is central} together with the three conditions that must
/// coincide: A piecewise syndetic, B syndetic, B nonempty.
struct ShiftSpectrum {
  ElementSet spectrum;
  bool piecewise_syndetic = false;
  bool spectrum_syndetic = false;
  bool spectrum_nonempty = false;

  bool agree() const {
    return piecewise_syndetic == spectrum_syndetic &&
           spectrum_syndetic == spectrum_nonempty;
  }
};

ShiftSpectrum central_shift_spectrum(const FiniteSemigroup& s,
                                     const ElementSet& a);

}  // namespace central
