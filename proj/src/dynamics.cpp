#include "central/dynamics.hpp"

#include <sstream>

#include "central/error.hpp"
#include "central/largeness.hpp"

namespace central {

namespace {

// Position of q among Q = (e, 0, 1, ...).
std::size_t q_index(Coordinate q) { return q ? *q + 1 : 0; }

}  // namespace

ShiftSystem ShiftSystem::build(const FiniteSemigroup& s, std::size_t max_order) {
  if (s.order() > max_order) {
    throw TooLarge("shift systems are limited to order " + std::to_string(max_order));
  }
  ShiftSystem sys(s, ideal_structure(s));
  const std::size_t n = s.order();
  const std::size_t q = n + 1;
  const std::size_t pts = sys.points();
  sys.table_.resize(n * pts);
  for (Element a = 0; a < n; ++a) {
    for (Point f = 0; f < pts; ++f) {
      Point g = 0;
      for (std::size_t xi = 0; xi < q; ++xi) {
        // x·a with e·a = a.
        const Element xa = xi == 0 ? a : s(static_cast<Element>(xi - 1), a);
        if (sys.value(f, xa)) g |= Point{1} << (q - 1 - xi);
      }
      sys.table_[a * pts + f] = g;
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Point f = 0; f < pts; ++f) {
        if (sys.act(s(a, b), f) != sys.act(a, sys.act(b, f))) {
          throw InvariantViolation(
              "homomorphism", "T_{st} differs from T_s T_t at s=" + std::to_string(a) +
                                  ", t=" + std::to_string(b) + ", point " +
                                  std::to_string(f));
        }
      }
    }
  }
  return sys;
}

bool ShiftSystem::value(Point x, Coordinate q) const {
  return (x >> (q_size() - 1 - q_index(q))) & 1u;
}

Point ShiftSystem::characteristic(const ElementSet& a, bool at_identity) const {
  s_.check_set(a);
  Point x = at_identity ? Point{1} << (q_size() - 1) : 0;
  for (Element s : a.members()) x |= Point{1} << (q_size() - 2 - s);
  return x;
}

ElementSet ShiftSystem::return_set(Point x, const PointSet& u) const {
  ElementSet out(s_.order());
  for (Element s = 0; s < s_.order(); ++s) {
    if (u.at(act(s, x))) out.insert(s);
  }
  return out;
}

PointSet ShiftSystem::cylinder(Coordinate q, bool b) const {
  PointSet u(points());
  for (Point z = 0; z < points(); ++z) u[z] = value(z, q) == b;
  return u;
}

std::string ShiftSystem::dump() const {
  std::ostringstream out;
  for (Element s = 0; s < s_.order(); ++s) {
    for (Point f = 0; f < points(); ++f) {
      out << s << ' ' << f << " -> " << act(s, f) << '\n';
    }
  }
  return out.str();
}

std::string point_text(const ShiftSystem& sys, Point x) {
  std::string bits;
  for (std::size_t i = 0; i < sys.q_size(); ++i) {
    bits += ((x >> (sys.q_size() - 1 - i)) & 1u) ? '1' : '0';
  }
  return bits;
}

std::string coordinate_text(Coordinate q) { return q ? std::to_string(*q) : "e"; }

bool RecurrenceReport::every_left_ideal() const {
  for (const auto& w : per_left_ideal) {
    if (!w) return false;
  }
  return !per_left_ideal.empty();
}

bool RecurrenceReport::agree() const {
  const bool ur = uniformly_recurrent();
  return ur == every_left_ideal() && ur == kernel_fixer.has_value() &&
         ur == idempotent_fixer.has_value();
}

RecurrenceReport uniform_recurrence(const ShiftSystem& sys, Point x) {
  RecurrenceReport out;
  const auto& s = sys.semigroup();
  PointSet self(sys.points());
  self[x] = true;
  out.syndetic_returns = syndetic_witness(s, sys.return_set(x, self));

  auto first_fixer = [&](const ElementSet& pool) -> std::optional<Element> {
    for (Element a : pool.members()) {
      if (sys.act(a, x) == x) return a;
    }
    return std::nullopt;
  };
  for (const auto& l : sys.ideals().minimal_left_ideals) {
    out.per_left_ideal.push_back(first_fixer(l));
  }
  out.kernel_fixer = first_fixer(sys.ideals().kernel);
  out.idempotent_fixer = first_fixer(sys.ideals().minimal_idempotents);
  return out;
}

std::optional<Element> proximal_witness(const ShiftSystem& sys, Point x, Point y) {
  for (Element s = 0; s < sys.semigroup().order(); ++s) {
    if (sys.act(s, x) == sys.act(s, y)) return s;
  }
  return std::nullopt;
}

DynReport recurrence_and_proximality(const ShiftSystem& sys, Point x, Point y) {
  if (x >= sys.points() || y >= sys.points()) {
    throw IndexOutOfRange("point outside [0, " + std::to_string(sys.points() - 1) + "]");
  }
  DynReport out{x, y, uniform_recurrence(sys, x), proximal_witness(sys, x, y), {}};
  for (Point z = 0; z < sys.points(); ++z) {
    if (proximal_witness(sys, x, z)) out.proximal_to.push_back(z);
  }
  return out;
}

DynCentralReport dynamically_central(const FiniteSemigroup& s, const ElementSet& a) {
  return dynamically_central(ShiftSystem::build(s), a);
}

DynCentralReport dynamically_central(const ShiftSystem& sys, const ElementSet& a) {
  const auto& s = sys.semigroup();
  s.check_set(a);
  DynCentralReport out;
  out.algebraic = sys.ideals().minimal_idempotents.intersects(a);

  std::vector<bool> recurrent(sys.points());
  for (Point y = 0; y < sys.points(); ++y) {
    recurrent[y] = uniform_recurrence(sys, y).uniformly_recurrent();
  }

  const Point x = sys.characteristic(a, true);
  for (Point y = 0; y < sys.points() && !out.canonical; ++y) {
    if (!recurrent[y]) continue;
    auto prox = proximal_witness(sys, x, y);
    if (!prox) continue;
    const bool b = sys.value(y, std::nullopt);
    if (sys.return_set(x, sys.cylinder(std::nullopt, b)) == a) {
      out.canonical = DynCentralWitness{x, y, std::nullopt, b, *prox};
    }
  }

  std::vector<Coordinate> coords{std::nullopt};
  for (Element q = 0; q < s.order(); ++q) coords.push_back(q);
  for (Point gx = 0; gx < sys.points() && !out.general; ++gx) {
    for (Point y = 0; y < sys.points() && !out.general; ++y) {
      if (!recurrent[y]) continue;
      auto prox = proximal_witness(sys, gx, y);
      if (!prox) continue;
      for (const auto& q : coords) {
        const bool b = sys.value(y, q);
        if (sys.return_set(gx, sys.cylinder(q, b)) == a) {
          out.general = DynCentralWitness{gx, y, q, b, *prox};
          break;
        }
      }
    }
  }
  return out;
}

std::optional<ProximalRecurrentFailure> check_proximal_recurrent_retraction(
    const ShiftSystem& sys) {
  const auto idem = sys.ideals().minimal_idempotents.members();
  for (Point y = 0; y < sys.points(); ++y) {
    if (!uniform_recurrence(sys, y).uniformly_recurrent()) continue;
    for (Point x = 0; x < sys.points(); ++x) {
      if (!proximal_witness(sys, x, y)) continue;
      bool found = false;
      for (Element u : idem) found = found || sys.act(u, x) == y;
      if (!found) return ProximalRecurrentFailure{x, y};
    }
  }
  return std::nullopt;
}

WindowSet block_match_set(const WindowSet& a, Value k, BlockReading reading) {
  const Value n_max = a.horizon() - k;
  if (k < 0 || n_max < 1) throw BadBounds("block length must lie in [0, N - 1]");
  if (reading == BlockReading::shifted_block) {
    return WindowSet::from_predicate(n_max, Origin::omega, [&](Value n) {
      for (Value j = 0; j <= k; ++j) {
        if (a.contains(n + j) != a.contains(j)) return false;
      }
      return true;
    });
  }
  // prefix[x] = |A ∩ [0, x)|, so the sumset test is a range count.
  const Value horizon = a.horizon();
  std::vector<Value> prefix(static_cast<std::size_t>(horizon) + 2, 0);
  for (Value x = 0; x <= horizon; ++x) {
    prefix[static_cast<std::size_t>(x) + 1] = prefix[static_cast<std::size_t>(x)] + a.contains(x);
  }
  auto count = [&](Value lo, Value hi) -> Value {
    lo = std::max<Value>(lo, 0);
    hi = std::min(hi, horizon);
    if (lo > hi) return 0;
    return prefix[static_cast<std::size_t>(hi) + 1] - prefix[static_cast<std::size_t>(lo)];
  };
  return WindowSet::from_predicate(n_max, Origin::omega, [&](Value n) {
    for (Value x = 0; x <= horizon; ++x) {
      const bool lhs = count(x - n - k, x - n) > 0;
      const bool rhs = x >= n && x <= n + k && a.contains(x - n);
      if (lhs != rhs) return false;
    }
    return true;
  });
}

WindowDynamics window_dynamics(const WindowSet& a, const WindowSet& b, Value k,
                               Value interval_len, Value gap_bound,
                               BlockReading reading) {
  if (a.origin() != Origin::omega || b.origin() != Origin::omega) {
    throw ConventionMismatch("window dynamics needs both sets to admit 0");
  }
  if (a.horizon() != b.horizon()) throw BadBounds("horizons differ");
  if (interval_len < 1 || gap_bound < 1) throw BadBounds("L and g must be positive");

  WindowDynamics out;
  out.recurrent_a = window_syndetic(block_match_set(a, k, reading), gap_bound);
  out.recurrent_b = window_syndetic(block_match_set(b, k, reading), gap_bound);

  // First maximal run of agreement with length at least L.
  Value start = 0;
  for (Value x = 0; x <= a.horizon() + 1; ++x) {
    const bool same = x <= a.horizon() && a.contains(x) == b.contains(x);
    if (same) continue;
    if (x - start >= interval_len) {
      out.proximal.status = Status::witnessed;
      out.proximal.witness = ThickWitness{{start, x - 1}};
      out.proximal.note = "A and B agree on [" + std::to_string(start) + ", " +
                          std::to_string(x - 1) + "]";
      break;
    }
    start = x + 1;
  }
  if (!out.proximal.witnessed()) {
    out.proximal.status = Status::refuted_in_window;
    out.proximal.note = "no interval of length " + std::to_string(interval_len) +
                        " where A and B agree";
  }

  auto& dc = out.dyn_central;
  if (!b.contains(0)) {
    dc.status = Status::refuted_in_window;
    dc.note = "0 is not in B";
  } else if (out.recurrent_b.refuted() || out.proximal.refuted()) {
    dc.status = Status::refuted_in_window;
    dc.note = out.recurrent_b.refuted() ? "B fails the block recurrence test"
                                        : "A and B are not proximal in the window";
  } else if (out.recurrent_b.witnessed() && out.proximal.witnessed()) {
    dc.status = Status::witnessed;
    dc.witness = out.proximal.witness;
    dc.note = "B recurrent, 0 ∈ B, " + out.proximal.note;
  } else {
    dc.status = Status::unknown;
    dc.note = "recurrence of B undecided in the window";
  }
  return out;
}

}  // namespace central
