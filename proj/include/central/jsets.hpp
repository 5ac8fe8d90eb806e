#pragma once

// Alternating products x(m, a, t, f) = a(1)·f(t₁)·a(2)···a(m)·f(t_m)·a(m+1),
// the bounded J-set witness search built on them, the g_w word reduction
// that turns a monochromatic combinatorial line into such a witness, and a
// bounded version of the recursion that assembles witnesses for every
// subfamily of a finite family of sequences.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "central/ambient.hpp"
#include "central/words.hpp"

namespace central {

/// A sequence with the finite domain [1, size()].
class SequenceTable {
 public:
  SequenceTable() = default;
  explicit SequenceTable(std::vector<Value> values) : values_(std::move(values)) {}
  static SequenceTable from_function(std::size_t length,
                                     const std::function<Value(std::size_t)>& f);

  std::size_t size() const noexcept { return values_.size(); }
  /// 1-based; throws UndefinedAt outside the domain.
  Value at(std::size_t n) const;
  const std::vector<Value>& values() const noexcept { return values_; }
  friend bool operator==(const SequenceTable&, const SequenceTable&) = default;

 private:
  std::vector<Value> values_;
};

struct ChiArguments {
  std::size_t m = 0;
  std::vector<Value> a;        // m + 1 entries
  std::vector<std::size_t> t;  // m strictly increasing positive entries
  friend bool operator==(const ChiArguments&, const ChiArguments&) = default;
};

/// Throws BadBounds when the shape is wrong, UndefinedAt when f lacks t_i.
Value chi_eval(const Ambient& s, const ChiArguments& x, const SequenceTable& f);

using Membership = std::function<bool(Value)>;

struct JBounds {
  std::size_t m_max = 2;
  std::size_t t_max = 16;
  std::vector<Value> candidates;  // for a; empty means the default set
  std::uint64_t budget = 10'000'000;  // chi evaluations
};

/// All elements of a finite carrier, or 1..8 for ℕ.
std::vector<Value> default_candidates(const Ambient& s);

/// Least (m, t, a) in lexicographic order with t₁ > min_t and
/// x(m, a, t, f) ∈ A for all f. Overflowing products count as outside A.
/// Throws BudgetExceeded when the evaluation budget runs out.
std::optional<ChiArguments> find_j_witness(const Ambient& s, const Membership& in_a,
                                           const std::vector<SequenceTable>& family,
                                           const JBounds& bounds,
                                           std::size_t min_t = 0);

/// g_w(l) = ∏_{i=1..N} d·h_{w_i}(N·l + i) for l in [1, l_max], N = |w|.
/// Throws DomainTooSmall for N = 0 or when some h is too short.
SequenceTable gw_sequence(const Ambient& s, const std::vector<SequenceTable>& h,
                          const Word& w, Value d, std::size_t l_max);

/// g_w for every w ∈ [1, k]^N, keyed by word index. Throws TooLarge beyond
/// 2^16 words.
std::map<std::size_t, SequenceTable> build_gw(const Ambient& s,
                                              const std::vector<SequenceTable>& h,
                                              std::size_t length, Value d,
                                              std::size_t l_max);

struct ReductionCheck {
  int letter = 0;
  Value reduced = 0;   // x(m, a, t, h_i)
  Value original = 0;  // x(p, b, s, g_{w(i)})
};

struct LineReduction {
  ChiArguments witness;
  std::vector<ReductionCheck> transcript;
};

/// Rewrites x(p, b, s, g_{w(★)}) as x(m, a, t, ★) with m = p·r and
/// t = (N·s_j + v_i). Each padding entry is the product of the constant
/// factors between consecutive star slots. Both sides are recomputed for
/// every letter; a mismatch throws VerificationFailed.
LineReduction reduce_line_to_witness(const Ambient& s, const std::vector<Value>& b,
                                     const std::vector<std::size_t>& shifts,
                                     const VariableWord& w,
                                     const std::vector<SequenceTable>& h, Value d);

struct CsetEntry {
  std::uint64_t subfamily = 0;  // bit i selects family[i]
  ChiArguments witness;
};

struct CsetOutcome {
  bool complete = false;
  std::vector<CsetEntry> entries;  // in processing order
  std::optional<std::uint64_t> failed_at;
  std::string diagnostics;

  const ChiArguments* find(std::uint64_t subfamily) const;
};

/// Processes nonempty subfamilies of size ≤ max_size by size, then
/// lexicographically. For each F: k = max t(G)(m(G)) over processed
/// G ⊊ F, M = all chain products over chains of processed proper
/// subfamilies, B = {x ∈ A : M·x ⊆ A}, then find_j_witness(B, F, k).
/// A failed search ends the recursion and is reported, not thrown.
CsetOutcome cset_recursion(const Ambient& s, const Membership& in_a,
                           const std::vector<SequenceTable>& family,
                           const JBounds& bounds, std::size_t max_size = 0);

struct CsetViolation {
  char condition = 'a';               // 'a': ordering, 'b': membership
  std::vector<std::uint64_t> chain;   // for (a) the pair F ⊊ G
  std::vector<std::size_t> selection;  // family index chosen in each link
  Value product = 0;
};

/// Checks (a) t(F)(m(F)) < t(G)(1) for every recorded F ⊊ G, and (b) that
/// every chain G₁ ⊊ … ⊊ G_n of recorded subfamilies with every selection
/// g_i ∈ G_i has its product in A.
std::optional<CsetViolation> verify_c_witness(const Ambient& s, const Membership& in_a,
                                              const std::vector<SequenceTable>& family,
                                              const std::vector<CsetEntry>& entries);

// Sequence file: "len" then len values.
std::string to_sequence_text(const SequenceTable& f);
SequenceTable parse_sequence(std::string_view text);
SequenceTable read_sequence_file(const std::filesystem::path& path);

}  // namespace central
