#pragma once

// Bounded-window analysis of subsets of ℕ. No verdict here asserts an
// asymptotic property: WITNESSED means a witness was found and re-checked
// inside [lower, N]; REFUTED_IN_WINDOW means the declared bounded search
// space was exhausted; UNKNOWN means the window cannot decide.

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "central/ambient.hpp"

namespace central {

/// ℕ = {1, 2, ...} by default; `omega` admits 0.
enum class Origin { natural, omega };

class WindowSet {
 public:
  WindowSet() = default;
  /// Sorts and deduplicates; throws InvariantViolation("range") for members
  /// outside [lower, horizon] and BadBounds for a non-positive horizon.
  WindowSet(Value horizon, std::vector<Value> members,
            Origin origin = Origin::natural);

  static WindowSet from_predicate(Value horizon, Origin origin,
                                  const std::function<bool(Value)>& keep);
  /// {x in window : x mod period is one of residues}.
  static WindowSet periodic(Value horizon, Value period,
                            const std::vector<Value>& residues,
                            Origin origin = Origin::natural);
  static WindowSet interval(Value horizon, Value from, Value to,
                            Origin origin = Origin::natural);

  Value horizon() const noexcept { return horizon_; }
  Origin origin() const noexcept { return origin_; }
  Value lower() const noexcept { return origin_ == Origin::omega ? 0 : 1; }
  bool contains(Value x) const noexcept {
    return x >= lower() && x <= horizon_ && bits_[static_cast<std::size_t>(x)];
  }
  const std::vector<Value>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool is_subset_of(const WindowSet& other) const;

  friend bool operator==(const WindowSet& a, const WindowSet& b) {
    return a.horizon_ == b.horizon_ && a.origin_ == b.origin_ &&
           a.members_ == b.members_;
  }

 private:
  Value horizon_ = 0;
  Origin origin_ = Origin::natural;
  std::vector<Value> members_;
  std::vector<char> bits_;
};

enum class Status { witnessed, refuted_in_window, unknown };
std::string_view to_string(Status s);

template <class Witness>
struct Verdict {
  Status status = Status::unknown;
  std::optional<Witness> witness;
  std::string note;

  bool witnessed() const { return status == Status::witnessed; }
  bool refuted() const { return status == Status::refuted_in_window; }
};

struct Interval {
  Value first = 0;
  Value last = -1;
  Value length() const { return last - first + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A finite coloring of [1, N] with colors 1..c.
class Coloring {
 public:
  Coloring() = default;
  /// colors[i] is the color of i + 1. Throws InvariantViolation("range").
  Coloring(std::size_t colors, std::vector<int> values);

  Value horizon() const noexcept { return static_cast<Value>(values_.size()); }
  std::size_t colors() const noexcept { return colors_; }
  int color(Value x) const { return values_.at(static_cast<std::size_t>(x - 1)); }
  const std::vector<int>& values() const noexcept { return values_; }
  WindowSet color_class(int color) const;

 private:
  std::size_t colors_ = 0;
  std::vector<int> values_;
};

enum class Combine { additive, multiplicative };
std::string_view to_string(Combine c);
Value combine(Combine mode, Value a, Value b);

struct Closure {
  std::vector<Value> values;  // sorted, within [1, cap]
  bool truncated = false;
};

/// FS(X) or FP(X) truncated to [1, cap]. Throws EmptyInput and BadBounds.
Closure combination_closure(const std::vector<Value>& x, Combine mode,
                            Value cap);

struct FsWitness {
  std::vector<Value> basis;
  std::vector<Value> closure;
};

/// Lexicographically least increasing X ⊆ [1, N], |X| = k, with
/// closure(X) ⊆ A. Never UNKNOWN.
Verdict<FsWitness> find_fs_basis(const WindowSet& a, std::size_t k,
                                 Combine mode);

struct ThickWitness {
  Interval interval;
};
struct SyndeticWitness {
  Value gap_bound = 0;
  Value largest_gap = 0;  // largest difference between consecutive members
};
struct PwsWindowWitness {
  std::vector<Value> shifts;  // G ⊆ [1, r]
  Interval interval;          // inside (A + G) ∩ window
};

struct WindowLargeness {
  Verdict<ThickWitness> thick;
  Verdict<SyndeticWitness> syndetic;
  Verdict<PwsWindowWitness> piecewise_syndetic;
};

Verdict<ThickWitness> window_thick(const WindowSet& a, Value interval_len);
Verdict<SyndeticWitness> window_syndetic(const WindowSet& a, Value gap_bound);
Verdict<PwsWindowWitness> window_piecewise_syndetic(const WindowSet& a,
                                                    Value interval_len,
                                                    Value shift_radius);
/// Throws BadBounds unless 1 <= g, L, r <= N.
WindowLargeness window_largeness(const WindowSet& a, Value gap_bound,
                                 Value interval_len, Value shift_radius);

/// A/n = {m : mn ∈ A} with horizon ⌊N/n⌋.
WindowSet div_set(const WindowSet& a, Value n);

struct BergelsonWitness {
  int color = 0;
  Value a = 0, b = 0, c = 0, d = 0;  // a + b = c·d
};

/// Least (c, d, a) with distinct monochromatic a, b, c, d ≤ N and
/// a + b = c·d. Every emitted witness passes verify_bergelson.
Verdict<BergelsonWitness> bergelson_search(const Coloring& col);

struct ClassScan {
  int color = 0;
  WindowSet members;
  WindowLargeness largeness;
  std::vector<Verdict<FsWitness>> additive_fs;        // k = 2..k_max
  std::vector<Verdict<FsWitness>> multiplicative_fs;  // k = 2..k_max
  bool additive_pws_and_multiplicative_fs = false;
};

std::vector<ClassScan> partition_scan(const Coloring& col, Value gap_bound,
                                      Value interval_len, Value shift_radius,
                                      std::size_t k_max);

// Independent verifiers. Each recomputes from definitions without reusing
// the search code.
bool verify_thick(const WindowSet& a, Value interval_len, const ThickWitness& w);
bool verify_syndetic(const WindowSet& a, const SyndeticWitness& w);
bool verify_piecewise_syndetic(const WindowSet& a, Value interval_len,
                               const PwsWindowWitness& w);
bool verify_fs(const WindowSet& a, std::size_t k, Combine mode,
               const FsWitness& w);
bool verify_bergelson(const Coloring& col, const BergelsonWitness& w);

// File formats.
//   WindowSet: "N <horizon> [omega]" then members, or
//              "periodic <period> <residues...>".
//   Coloring:  "N <horizon> C <colors>" then N color values.
std::string to_window_text(const WindowSet& a);
WindowSet parse_window(std::string_view text);
WindowSet read_window_file(const std::filesystem::path& path);
std::string to_coloring_text(const Coloring& col);
Coloring parse_coloring(std::string_view text);
Coloring read_coloring_file(const std::filesystem::path& path);

}  // namespace central
