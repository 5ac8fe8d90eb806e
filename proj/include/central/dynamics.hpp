#pragma once

// The shift system of a finite semigroup S on 2^Q with Q = S ∪ {e}, where e
// is an adjoined two-sided identity, and the recurrence/proximality notions
// evaluated on it. Also window-level analogues for subsets of ω.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "central/ideals.hpp"
#include "central/semigroup.hpp"
#include "central/window.hpp"

namespace central {

/// A point z : Q → {0,1} as a binary numeral: z(e) is the most significant
/// bit, followed by z(0), z(1), ....
using Point = std::uint32_t;
using PointSet = std::vector<bool>;

/// A coordinate of Q: nullopt is e, otherwise an element of S.
using Coordinate = std::optional<Element>;

class ShiftSystem {
 public:
  /// Builds T_s(f)(x) = f(x·s) for every s and f and checks
  /// T_{st} = T_s ∘ T_t exhaustively. Throws TooLarge when |S| > max_order.
  static ShiftSystem build(const FiniteSemigroup& s, std::size_t max_order = 4);

  const FiniteSemigroup& semigroup() const noexcept { return s_; }
  const IdealStructure& ideals() const noexcept { return ideals_; }
  std::size_t q_size() const noexcept { return s_.order() + 1; }
  std::size_t points() const noexcept { return std::size_t{1} << q_size(); }

  Point act(Element s, Point x) const { return table_[s * points() + x]; }
  bool value(Point x, Coordinate q) const;
  /// The point with z(e) = at_identity and z(s) = [s ∈ A].
  Point characteristic(const ElementSet& a, bool at_identity) const;

  /// R(x, U) = {s ∈ S : T_s(x) ∈ U}.
  ElementSet return_set(Point x, const PointSet& u) const;
  /// {z : z(q) = b}.
  PointSet cylinder(Coordinate q, bool b) const;

  /// Lines "s point -> point" for every s and point.
  std::string dump() const;

 private:
  ShiftSystem(FiniteSemigroup s, IdealStructure ideals)
      : s_(std::move(s)), ideals_(std::move(ideals)) {}

  FiniteSemigroup s_;
  IdealStructure ideals_;
  std::vector<Point> table_;
};

std::string point_text(const ShiftSystem& sys, Point x);
std::string coordinate_text(Coordinate q);

/// Uniform recurrence of a point decided three ways, which must agree.
struct RecurrenceReport {
  std::optional<ElementSet> syndetic_returns;       // G with S = G⁻¹R(x,{x})
  std::vector<std::optional<Element>> per_left_ideal;  // α ∈ L with T_α x = x
  std::optional<Element> kernel_fixer;              // α ∈ K(S)
  std::optional<Element> idempotent_fixer;          // minimal idempotent α

  bool uniformly_recurrent() const { return syndetic_returns.has_value(); }
  bool every_left_ideal() const;
  bool agree() const;
};

RecurrenceReport uniform_recurrence(const ShiftSystem& sys, Point x);

/// Least s with T_s x = T_s y.
std::optional<Element> proximal_witness(const ShiftSystem& sys, Point x, Point y);

struct DynReport {
  Point x = 0;
  Point y = 0;
  RecurrenceReport recurrence;       // of x
  std::optional<Element> proximal;   // witness that x, y are proximal
  std::vector<Point> proximal_to;    // every point proximal to x
};

DynReport recurrence_and_proximality(const ShiftSystem& sys, Point x, Point y);

struct DynCentralWitness {
  Point x = 0;
  Point y = 0;
  Coordinate q;  // U = {z : z(q) = b}
  bool b = true;
  Element proximal_at = 0;
};

struct DynCentralReport {
  std::optional<DynCentralWitness> canonical;  // x = χ_A with x(e) = 1, q = e
  std::optional<DynCentralWitness> general;    // any x, y and cylinder U ∋ y
  bool algebraic = false;                      // A meets the minimal idempotents
  bool dynamically_central() const { return canonical.has_value(); }
  bool agree() const {
    return canonical.has_value() == general.has_value() &&
           canonical.has_value() == algebraic;
  }
};

/// Throws TooLarge beyond order 4.
DynCentralReport dynamically_central(const FiniteSemigroup& s, const ElementSet& a);
DynCentralReport dynamically_central(const ShiftSystem& sys, const ElementSet& a);

/// A pair violating "x, y proximal and y uniformly recurrent ⇒ T_α x = y
/// for some minimal idempotent α".
struct ProximalRecurrentFailure {
  Point x = 0;
  Point y = 0;
};
std::optional<ProximalRecurrentFailure> check_proximal_recurrent_retraction(
    const ShiftSystem& sys);

// Window-level analogues on subsets of ω.

enum class BlockReading {
  shifted_block,  // A ∩ [n, n+k] = n + (A ∩ [0, k])
  sumset,         // (A + [n, n+k]) ∩ [0, N] = n + (A ∩ [0, k])
};

/// {n ∈ [0, N−k] : the block condition holds at n}, horizon N − k.
WindowSet block_match_set(const WindowSet& a, Value k, BlockReading reading);

struct WindowDynamics {
  Verdict<SyndeticWitness> recurrent_a;  // block matches of A syndetic
  Verdict<SyndeticWitness> recurrent_b;
  Verdict<ThickWitness> proximal;        // A ∩ I = B ∩ I with |I| ≥ L
  Verdict<ThickWitness> dyn_central;     // recurrent_b ∧ proximal ∧ 0 ∈ B
};

/// Throws ConventionMismatch unless both sets admit 0, BadBounds unless the
/// horizons agree and 0 ≤ k ≤ N, 1 ≤ L, g.
WindowDynamics window_dynamics(const WindowSet& a, const WindowSet& b, Value k,
                               Value interval_len, Value gap_bound,
                               BlockReading reading = BlockReading::shifted_block);

}  // namespace central
