#include "central/window.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "central/combinatorics.hpp"
#include "central/error.hpp"
#include "central/text.hpp"

namespace central {

namespace {

// Largest horizon a window may declare; keeps bitmaps bounded.
constexpr Value kMaxHorizon = Value{1} << 26;
constexpr Value kMaxShiftRadius = 24;

std::string interval_text(const Interval& i) {
  return "[" + std::to_string(i.first) + ", " + std::to_string(i.last) + "]";
}

}  // namespace

WindowSet::WindowSet(Value horizon, std::vector<Value> members, Origin origin)
    : horizon_(horizon), origin_(origin) {
  if (horizon < 1) throw BadBounds("window horizon must be positive");
  if (horizon > kMaxHorizon) throw TooLarge("window horizon too large");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  bits_.assign(static_cast<std::size_t>(horizon) + 1, 0);
  for (Value x : members) {
    if (x < lower() || x > horizon) {
      throw IndexOutOfRange("member " + std::to_string(x) + " outside [" +
                            std::to_string(lower()) + ", " +
                            std::to_string(horizon) + "]");
    }
    bits_[static_cast<std::size_t>(x)] = 1;
  }
  members_ = std::move(members);
}

WindowSet WindowSet::from_predicate(Value horizon, Origin origin,
                                    const std::function<bool(Value)>& keep) {
  std::vector<Value> members;
  for (Value x = origin == Origin::omega ? 0 : 1; x <= horizon; ++x) {
    if (keep(x)) members.push_back(x);
  }
  return WindowSet(horizon, std::move(members), origin);
}

WindowSet WindowSet::periodic(Value horizon, Value period,
                              const std::vector<Value>& residues,
                              Origin origin) {
  if (period < 1) throw BadBounds("period must be positive");
  std::vector<char> keep(static_cast<std::size_t>(period), 0);
  for (Value r : residues) {
    if (r < 0 || r >= period) {
      throw IndexOutOfRange("residue " + std::to_string(r) + " not below period " +
                            std::to_string(period));
    }
    keep[static_cast<std::size_t>(r)] = 1;
  }
  return from_predicate(horizon, origin, [&](Value x) {
    return keep[static_cast<std::size_t>(x % period)] != 0;
  });
}

WindowSet WindowSet::interval(Value horizon, Value from, Value to, Origin origin) {
  std::vector<Value> members;
  for (Value x = from; x <= to; ++x) members.push_back(x);
  return WindowSet(horizon, std::move(members), origin);
}

bool WindowSet::is_subset_of(const WindowSet& other) const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](Value x) { return other.contains(x); });
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::witnessed:
      return "WITNESSED";
    case Status::refuted_in_window:
      return "REFUTED_IN_WINDOW";
    case Status::unknown:
      return "UNKNOWN";
  }
  return "?";
}

Coloring::Coloring(std::size_t colors, std::vector<int> values)
    : colors_(colors), values_(std::move(values)) {
  if (colors_ == 0) throw InvariantViolation("range", "need at least one color");
  if (values_.empty()) throw BadBounds("coloring horizon must be positive");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 1 || static_cast<std::size_t>(values_[i]) > colors_) {
      throw IndexOutOfRange("color of " + std::to_string(i + 1) + " is " +
                            std::to_string(values_[i]) + ", outside [1, " +
                            std::to_string(colors_) + "]");
    }
  }
}

WindowSet Coloring::color_class(int c) const {
  return WindowSet::from_predicate(horizon(), Origin::natural,
                                   [&](Value x) { return color(x) == c; });
}

std::string_view to_string(Combine c) {
  return c == Combine::additive ? "additive" : "multiplicative";
}

Value combine(Combine mode, Value a, Value b) {
  Value out = 0;
  bool overflow = mode == Combine::additive ? __builtin_add_overflow(a, b, &out)
                                            : __builtin_mul_overflow(a, b, &out);
  if (overflow) throw Overflow("combination overflows int64");
  return out;
}

Closure combination_closure(const std::vector<Value>& x, Combine mode,
                            Value cap) {
  if (x.empty()) throw EmptyInput("combination_closure needs a nonempty set");
  std::vector<Value> generators(x);
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  if (generators.front() < 1) throw BadBounds("generators must be positive");
  if (cap < generators.back()) throw BadBounds("cap must be at least max(X)");

  Closure out;
  std::set<Value> current;
  for (Value g : generators) {
    std::set<Value> next = current;
    next.insert(g);
    for (Value c : current) {
      Value v = 0;
      bool overflow = mode == Combine::additive ? __builtin_add_overflow(c, g, &v)
                                                : __builtin_mul_overflow(c, g, &v);
      if (overflow || v > cap) {
        out.truncated = true;
      } else {
        next.insert(v);
      }
    }
    current = std::move(next);
  }
  out.values.assign(current.begin(), current.end());
  return out;
}

Verdict<FsWitness> find_fs_basis(const WindowSet& a, std::size_t k,
                                 Combine mode) {
  if (k == 0) throw BadBounds("basis size must be at least 1");
  const Value n = a.horizon();
  Verdict<FsWitness> out;

  std::vector<Value> chosen;
  std::vector<Value> closure;
  // Smallest possible value of the full combination once `r` more
  // increasing generators starting at x are added; prunes the scan.
  auto lower_bound_of_total = [&](Value base, Value x, std::size_t r) -> Value {
    Value total = base;
    for (std::size_t i = 0; i < r; ++i) {
      Value next = 0;
      Value term = x + static_cast<Value>(i);
      bool overflow = mode == Combine::additive
                          ? __builtin_add_overflow(total, term, &next)
                          : __builtin_mul_overflow(total, term, &next);
      if (overflow || next > n) return n + 1;
      total = next;
    }
    return total;
  };

  std::function<bool(Value, Value)> search = [&](Value start, Value total) {
    if (chosen.size() == k) return true;
    const std::size_t remaining = k - chosen.size();
    for (Value x = std::max<Value>(start, 1); x <= n; ++x) {
      if (lower_bound_of_total(total, x, remaining) > n) break;
      if (!a.contains(x)) continue;
      bool ok = true;
      std::vector<Value> fresh{x};
      for (Value c : closure) {
        Value v = combine(mode, c, x);
        if (!a.contains(v)) {
          ok = false;
          break;
        }
        fresh.push_back(v);
      }
      if (!ok) continue;
      const auto saved = closure.size();
      closure.insert(closure.end(), fresh.begin(), fresh.end());
      chosen.push_back(x);
      const Value next_total = chosen.size() == 1 ? x : combine(mode, total, x);
      if (search(x + 1, next_total)) return true;
      chosen.pop_back();
      closure.resize(saved);
    }
    return false;
  };

  const Value identity = mode == Combine::additive ? 0 : 1;
  if (search(1, identity)) {
    std::sort(closure.begin(), closure.end());
    closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
    out.status = Status::witnessed;
    out.witness = FsWitness{chosen, closure};
    out.note = "closure of the basis lies in A within [1, " + std::to_string(n) + "]";
  } else {
    out.status = Status::refuted_in_window;
    out.note = "no " + std::to_string(k) + "-element basis with " +
               std::string(to_string(mode)) + " closure inside A within [1, " +
               std::to_string(n) + "]";
  }
  return out;
}

Verdict<ThickWitness> window_thick(const WindowSet& a, Value interval_len) {
  Verdict<ThickWitness> out;
  Value run_start = 0;
  Value run = 0;
  for (Value x = a.lower(); x <= a.horizon(); ++x) {
    if (a.contains(x)) {
      if (run == 0) run_start = x;
      if (++run >= interval_len) {
        out.status = Status::witnessed;
        out.witness = ThickWitness{{run_start, run_start + interval_len - 1}};
        out.note = "interval " + interval_text(out.witness->interval) + " ⊆ A";
        return out;
      }
    } else {
      run = 0;
    }
  }
  out.status = Status::refuted_in_window;
  out.note = "no interval of length " + std::to_string(interval_len) +
             " inside A within the window";
  return out;
}

Verdict<SyndeticWitness> window_syndetic(const WindowSet& a, Value gap_bound) {
  Verdict<SyndeticWitness> out;
  // A virtual member just below the window makes the leading run count.
  Value previous = a.lower() - 1;
  Value largest = 0;
  for (Value m : a.members()) {
    const Value gap = m - previous;
    if (gap > gap_bound) {
      out.status = Status::refuted_in_window;
      out.note = "gap " + std::to_string(gap) + " between " +
                 std::to_string(previous) + " and " + std::to_string(m) +
                 " exceeds " + std::to_string(gap_bound);
      return out;
    }
    largest = std::max(largest, gap);
    previous = m;
  }
  if (a.horizon() - previous >= gap_bound) {
    out.status = Status::unknown;
    out.note = "only obstruction is the run after " + std::to_string(previous) +
               ", which touches the horizon " + std::to_string(a.horizon());
    return out;
  }
  out.status = Status::witnessed;
  out.witness = SyndeticWitness{gap_bound, largest};
  out.note = "every block of " + std::to_string(gap_bound) +
             " consecutive integers in the window meets A";
  return out;
}

Verdict<PwsWindowWitness> window_piecewise_syndetic(const WindowSet& a,
                                                    Value interval_len,
                                                    Value shift_radius) {
  if (shift_radius > kMaxShiftRadius) {
    throw TooLarge("shift radius above " + std::to_string(kMaxShiftRadius));
  }
  Verdict<PwsWindowWitness> out;
  const Value lo = a.lower();
  const Value hi = a.horizon();
  std::vector<char> covered(static_cast<std::size_t>(hi) + 1, 0);
  for_each_subset_by_size(
      static_cast<std::size_t>(shift_radius),
      [&](const std::vector<std::size_t>& pick) {
        std::vector<Value> shifts;
        for (auto i : pick) shifts.push_back(static_cast<Value>(i) + 1);
        std::fill(covered.begin(), covered.end(), 0);
        for (Value m : a.members()) {
          for (Value g : shifts) {
            if (m + g <= hi) covered[static_cast<std::size_t>(m + g)] = 1;
          }
        }
        Value run = 0;
        for (Value x = lo; x <= hi; ++x) {
          run = covered[static_cast<std::size_t>(x)] ? run + 1 : 0;
          if (run >= interval_len) {
            out.status = Status::witnessed;
            out.witness = PwsWindowWitness{
                shifts, {x - interval_len + 1, x}};
            return true;
          }
        }
        return false;
      });
  if (out.witnessed()) {
    out.note = "A + G covers " + interval_text(out.witness->interval);
  } else {
    out.status = Status::refuted_in_window;
    out.note = "no G ⊆ [1, " + std::to_string(shift_radius) +
               "] makes A + G cover " + std::to_string(interval_len) +
               " consecutive integers in the window";
  }
  return out;
}

WindowLargeness window_largeness(const WindowSet& a, Value gap_bound,
                                 Value interval_len, Value shift_radius) {
  const Value n = a.horizon();
  for (Value v : {gap_bound, interval_len, shift_radius}) {
    if (v < 1 || v > n) {
      throw BadBounds("bounds must lie in [1, " + std::to_string(n) + "]");
    }
  }
  return {window_thick(a, interval_len), window_syndetic(a, gap_bound),
          window_piecewise_syndetic(a, interval_len, shift_radius)};
}

WindowSet div_set(const WindowSet& a, Value n) {
  if (n == 0) throw ZeroDivisor();
  if (n < 0) throw BadBounds("divisor must be positive");
  const Value horizon = a.horizon() / n;
  if (horizon < 1) throw BadBounds("divisor exceeds the horizon");
  return WindowSet::from_predicate(horizon, a.origin(),
                                   [&](Value m) { return a.contains(m * n); });
}

Verdict<BergelsonWitness> bergelson_search(const Coloring& col) {
  const Value n = col.horizon();
  Verdict<BergelsonWitness> out;
  for (Value c = 1; c <= n; ++c) {
    for (Value d = 1; d <= n && c * d <= 2 * n - 1; ++d) {
      const Value target = c * d;
      const int color = col.color(c);
      if (col.color(d) != color) continue;
      for (Value a = std::max<Value>(1, target - n); a <= std::min(n, target - 1);
           ++a) {
        const Value b = target - a;
        if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
        if (col.color(a) != color || col.color(b) != color) continue;
        BergelsonWitness w{color, a, b, c, d};
        if (!verify_bergelson(col, w)) {
          throw VerificationFailed(0, "bergelson witness failed verification");
        }
        out.status = Status::witnessed;
        out.witness = w;
        out.note = std::to_string(a) + " + " + std::to_string(b) + " = " +
                   std::to_string(c) + " · " + std::to_string(d) + " in color " +
                   std::to_string(color);
        return out;
      }
    }
  }
  out.status = Status::refuted_in_window;
  out.note = "no monochromatic distinct solution of x + y = w·z within [1, " +
             std::to_string(n) + "]";
  return out;
}

std::vector<ClassScan> partition_scan(const Coloring& col, Value gap_bound,
                                      Value interval_len, Value shift_radius,
                                      std::size_t k_max) {
  std::vector<ClassScan> out;
  for (int color = 1; color <= static_cast<int>(col.colors()); ++color) {
    ClassScan scan;
    scan.color = color;
    scan.members = col.color_class(color);
    scan.largeness =
        window_largeness(scan.members, gap_bound, interval_len, shift_radius);
    bool all_mult = k_max >= 2;
    for (std::size_t k = 2; k <= k_max; ++k) {
      scan.additive_fs.push_back(find_fs_basis(scan.members, k, Combine::additive));
      scan.multiplicative_fs.push_back(
          find_fs_basis(scan.members, k, Combine::multiplicative));
      all_mult = all_mult && scan.multiplicative_fs.back().witnessed();
    }
    scan.additive_pws_and_multiplicative_fs =
        scan.largeness.piecewise_syndetic.witnessed() && all_mult;
    out.push_back(std::move(scan));
  }
  return out;
}

bool verify_thick(const WindowSet& a, Value interval_len, const ThickWitness& w) {
  if (w.interval.length() != interval_len) return false;
  for (Value x = w.interval.first; x <= w.interval.last; ++x) {
    if (!a.contains(x)) return false;
  }
  return true;
}

bool verify_syndetic(const WindowSet& a, const SyndeticWitness& w) {
  const Value g = w.gap_bound;
  if (g < 1) return false;
  for (Value s = a.lower(); s + g - 1 <= a.horizon(); ++s) {
    bool hit = false;
    for (Value x = s; x < s + g; ++x) hit = hit || a.contains(x);
    if (!hit) return false;
  }
  if (a.empty()) return false;
  Value largest = a.members().front() - (a.lower() - 1);
  for (std::size_t i = 1; i < a.members().size(); ++i) {
    largest = std::max(largest, a.members()[i] - a.members()[i - 1]);
  }
  return largest == w.largest_gap && largest <= g;
}

bool verify_piecewise_syndetic(const WindowSet& a, Value interval_len,
                               const PwsWindowWitness& w) {
  if (w.shifts.empty() || w.interval.length() != interval_len) return false;
  if (w.interval.first < a.lower() || w.interval.last > a.horizon()) return false;
  for (Value x = w.interval.first; x <= w.interval.last; ++x) {
    bool hit = false;
    for (Value g : w.shifts) hit = hit || (g >= 1 && a.contains(x - g));
    if (!hit) return false;
  }
  return true;
}

bool verify_fs(const WindowSet& a, std::size_t k, Combine mode,
               const FsWitness& w) {
  if (w.basis.size() != k || k >= 63) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (w.basis[i] < 1) return false;
    if (i && w.basis[i] <= w.basis[i - 1]) return false;
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    Value v = mode == Combine::additive ? 0 : 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (!((mask >> i) & 1u)) continue;
      Value next = 0;
      bool overflow = mode == Combine::additive
                          ? __builtin_add_overflow(v, w.basis[i], &next)
                          : __builtin_mul_overflow(v, w.basis[i], &next);
      if (overflow) return false;
      v = next;
    }
    if (!a.contains(v)) return false;
  }
  return true;
}

bool verify_bergelson(const Coloring& col, const BergelsonWitness& w) {
  const Value vals[4] = {w.a, w.b, w.c, w.d};
  for (int i = 0; i < 4; ++i) {
    if (vals[i] < 1 || vals[i] > col.horizon()) return false;
    if (col.color(vals[i]) != w.color) return false;
    for (int j = 0; j < i; ++j) {
      if (vals[i] == vals[j]) return false;
    }
  }
  return w.a + w.b == w.c * w.d;
}

std::string to_window_text(const WindowSet& a) {
  std::ostringstream out;
  out << "N " << a.horizon();
  if (a.origin() == Origin::omega) out << " omega";
  out << '\n';
  bool first = true;
  for (Value x : a.members()) {
    if (!first) out << ' ';
    out << x;
    first = false;
  }
  out << '\n';
  return out.str();
}

WindowSet parse_window(std::string_view source) {
  auto lines = text::split_lines(source);
  std::size_t cursor = 0;
  while (cursor < lines.size() && text::split_tokens(lines[cursor].text).empty())
    ++cursor;
  if (cursor >= lines.size()) throw ParseError(1, 1, "missing 'N <horizon>' line");
  const auto& head_line = lines[cursor];
  auto head = text::split_tokens(head_line.text);
  if (head.size() < 2 || head.size() > 3 || head[0].text != "N") {
    throw ParseError(head_line.number, 1, "expected 'N <horizon> [omega]'");
  }
  const Value horizon = text::to_integer(head[1], head_line.number);
  Origin origin = Origin::natural;
  if (head.size() == 3) {
    if (head[2].text != "omega") {
      throw ParseError(head_line.number, head[2].column,
                       "unknown flag '" + std::string(head[2].text) + "'");
    }
    origin = Origin::omega;
  }
  if (horizon < 1) throw ParseError(head_line.number, head[1].column, "horizon must be positive");
  ++cursor;

  std::vector<Value> members;
  bool periodic = false;
  Value period = 0;
  std::vector<Value> residues;
  for (; cursor < lines.size(); ++cursor) {
    auto tokens = text::split_tokens(lines[cursor].text);
    if (tokens.empty()) continue;
    std::size_t i = 0;
    if (tokens[0].text == "periodic") {
      if (periodic || !members.empty() || tokens.size() < 2) {
        throw ParseError(lines[cursor].number, tokens[0].column,
                         "malformed periodic line");
      }
      periodic = true;
      period = text::to_integer(tokens[1], lines[cursor].number);
      i = 2;
      for (; i < tokens.size(); ++i) {
        residues.push_back(text::to_integer(tokens[i], lines[cursor].number));
      }
      continue;
    }
    if (periodic) {
      throw ParseError(lines[cursor].number, tokens[0].column,
                       "content after periodic line");
    }
    for (; i < tokens.size(); ++i) {
      members.push_back(text::to_integer(tokens[i], lines[cursor].number));
    }
  }
  if (periodic) {
    if (period < 1) throw ParseError(head_line.number + 1, 1, "period must be positive");
    return WindowSet::periodic(horizon, period, residues, origin);
  }
  return WindowSet(horizon, std::move(members), origin);
}

WindowSet read_window_file(const std::filesystem::path& path) {
  return parse_window(text::read_file(path));
}

std::string to_coloring_text(const Coloring& col) {
  std::ostringstream out;
  out << "N " << col.horizon() << " C " << col.colors() << '\n';
  for (std::size_t i = 0; i < col.values().size(); ++i) {
    if (i) out << ' ';
    out << col.values()[i];
  }
  out << '\n';
  return out.str();
}

Coloring parse_coloring(std::string_view source) {
  auto lines = text::split_lines(source);
  std::size_t cursor = 0;
  while (cursor < lines.size() && text::split_tokens(lines[cursor].text).empty())
    ++cursor;
  if (cursor >= lines.size()) throw ParseError(1, 1, "missing 'N <horizon> C <colors>' line");
  const auto& head_line = lines[cursor];
  auto head = text::split_tokens(head_line.text);
  if (head.size() != 4 || head[0].text != "N" || head[2].text != "C") {
    throw ParseError(head_line.number, 1, "expected 'N <horizon> C <colors>'");
  }
  const Value horizon = text::to_integer(head[1], head_line.number);
  const Value colors = text::to_integer(head[3], head_line.number);
  if (horizon < 1 || colors < 1) {
    throw ParseError(head_line.number, 1, "horizon and colors must be positive");
  }
  std::vector<int> values;
  for (++cursor; cursor < lines.size(); ++cursor) {
    for (const auto& token : text::split_tokens(lines[cursor].text)) {
      if (static_cast<Value>(values.size()) == horizon) {
        throw ParseError(lines[cursor].number, token.column, "more than N color values");
      }
      values.push_back(static_cast<int>(text::to_integer(token, lines[cursor].number)));
    }
  }
  if (static_cast<Value>(values.size()) != horizon) {
    throw ParseError(lines.empty() ? 1 : lines.back().number, 1,
                     "expected " + std::to_string(horizon) + " color values, got " +
                         std::to_string(values.size()));
  }
  return Coloring(static_cast<std::size_t>(colors), std::move(values));
}

Coloring read_coloring_file(const std::filesystem::path& path) {
  return parse_coloring(text::read_file(path));
}

}  // namespace central
