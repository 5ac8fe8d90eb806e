#include "central/jsets.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "central/combinatorics.hpp"
#include "central/error.hpp"
#include "central/families.hpp"
#include "central/text.hpp"

namespace central {

namespace {

constexpr std::size_t kMaxCsetFamily = 6;

std::optional<Value> try_product(const Ambient& s, Value a, Value b) {
  try {
    return s(a, b);
  } catch (const Overflow&) {
    return std::nullopt;
  }
}

std::optional<Value> try_chi(const Ambient& s, const ChiArguments& x,
                             const SequenceTable& f) {
  try {
    return chi_eval(s, x, f);
  } catch (const Overflow&) {
    return std::nullopt;
  }
}

// Advances t to the next strictly increasing sequence with entries in
// [lo, hi]; false when exhausted.
bool next_increasing(std::vector<std::size_t>& t, std::size_t hi) {
  const std::size_t m = t.size();
  std::size_t i = m;
  while (i > 0 && t[i - 1] == hi - (m - i)) --i;
  if (i == 0) return false;
  ++t[i - 1];
  for (std::size_t j = i; j < m; ++j) t[j] = t[j - 1] + 1;
  return true;
}

std::string t_text(const std::vector<std::size_t>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(t[i]);
  }
  return out + ")";
}

}  // namespace

SequenceTable SequenceTable::from_function(std::size_t length,
                                           const std::function<Value(std::size_t)>& f) {
  std::vector<Value> values(length);
  for (std::size_t n = 1; n <= length; ++n) values[n - 1] = f(n);
  return SequenceTable(std::move(values));
}

Value SequenceTable::at(std::size_t n) const {
  if (n < 1 || n > values_.size()) throw UndefinedAt(n);
  return values_[n - 1];
}

Value chi_eval(const Ambient& s, const ChiArguments& x, const SequenceTable& f) {
  if (x.m == 0 || x.a.size() != x.m + 1 || x.t.size() != x.m) {
    throw BadBounds("need m >= 1, |a| = m + 1 and |t| = m");
  }
  for (std::size_t i = 0; i < x.m; ++i) {
    if (x.t[i] == 0 || (i && x.t[i] <= x.t[i - 1])) {
      throw BadBounds("t must be strictly increasing and positive: " + t_text(x.t));
    }
  }
  Value acc = x.a[0];
  if (!s.is_element(acc)) throw ElementOutOfRange(std::to_string(acc) + " not in " + s.name());
  for (std::size_t i = 0; i < x.m; ++i) {
    acc = s(acc, f.at(x.t[i]));
    acc = s(acc, x.a[i + 1]);
  }
  return acc;
}

std::vector<Value> default_candidates(const Ambient& s) {
  std::vector<Value> out;
  if (s.kind() == Ambient::Kind::finite) {
    for (Value x = 0; x < static_cast<Value>(s.table().order()); ++x) out.push_back(x);
  } else {
    for (Value x = 1; x <= 8; ++x) out.push_back(x);
  }
  return out;
}

std::optional<ChiArguments> find_j_witness(const Ambient& s, const Membership& in_a,
                                           const std::vector<SequenceTable>& family,
                                           const JBounds& bounds, std::size_t min_t) {
  if (family.empty()) throw EmptyInput("find_j_witness needs at least one sequence");
  std::vector<Value> cand = bounds.candidates.empty() ? default_candidates(s)
                                                      : bounds.candidates;
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  for (Value c : cand) {
    if (!s.is_element(c)) throw ElementOutOfRange(std::to_string(c) + " not in " + s.name());
  }
  if (cand.empty()) return std::nullopt;

  std::uint64_t evaluations = 0;
  for (std::size_t m = 1; m <= bounds.m_max; ++m) {
    if (min_t + m > bounds.t_max) break;
    ChiArguments x{m, std::vector<Value>(m + 1), std::vector<std::size_t>(m)};
    for (std::size_t i = 0; i < m; ++i) x.t[i] = min_t + 1 + i;
    do {
      std::vector<std::size_t> pick(m + 1, 0);
      while (true) {
        for (std::size_t i = 0; i <= m; ++i) x.a[i] = cand[pick[i]];
        bool ok = true;
        for (const auto& f : family) {
          if (++evaluations > bounds.budget) {
            throw BudgetExceeded("J-witness search exceeded " +
                                     std::to_string(bounds.budget) + " evaluations",
                                 m);
          }
          auto v = try_chi(s, x, f);
          if (!v || !in_a(*v)) {
            ok = false;
            break;
          }
        }
        if (ok) return x;
        std::size_t pos = m + 1;
        while (pos > 0 && pick[pos - 1] + 1 == cand.size()) pick[--pos] = 0;
        if (pos == 0) break;
        ++pick[pos - 1];
      }
    } while (next_increasing(x.t, bounds.t_max));
  }
  return std::nullopt;
}

SequenceTable gw_sequence(const Ambient& s, const std::vector<SequenceTable>& h,
                          const Word& w, Value d, std::size_t l_max) {
  const std::size_t n = w.letters.size();
  if (n == 0) throw DomainTooSmall("g_w needs a word of positive length");
  check_word(w);
  if (h.size() != w.alphabet) {
    throw BadBounds("need one sequence per letter: " + std::to_string(w.alphabet) +
                    " letters, " + std::to_string(h.size()) + " sequences");
  }
  const std::size_t needed = n * l_max + n;
  for (const auto& hi : h) {
    if (hi.size() < needed) {
      throw DomainTooSmall("h is defined up to " + std::to_string(hi.size()) +
                           ", g_w needs " + std::to_string(needed));
    }
  }
  std::vector<Value> values(l_max);
  for (std::size_t l = 1; l <= l_max; ++l) {
    Value acc = d;
    for (std::size_t i = 1; i <= n; ++i) {
      if (i > 1) acc = s(acc, d);
      acc = s(acc, h[static_cast<std::size_t>(w.letters[i - 1] - 1)].at(n * l + i));
    }
    values[l - 1] = acc;
  }
  return SequenceTable(std::move(values));
}

std::map<std::size_t, SequenceTable> build_gw(const Ambient& s,
                                              const std::vector<SequenceTable>& h,
                                              std::size_t length, Value d,
                                              std::size_t l_max) {
  if (length == 0) throw DomainTooSmall("g_w needs a word of positive length");
  const std::size_t k = h.size();
  if (k == 0) throw EmptyInput("need at least one sequence");
  std::size_t words = 1;
  for (std::size_t i = 0; i < length; ++i) {
    words *= k;
    if (words > (std::size_t{1} << 16)) throw TooLarge("more than 2^16 words");
  }
  std::map<std::size_t, SequenceTable> out;
  for (std::size_t idx = 0; idx < words; ++idx) {
    out.emplace(idx, gw_sequence(s, h, word_at(k, length, idx), d, l_max));
  }
  return out;
}

LineReduction reduce_line_to_witness(const Ambient& s, const std::vector<Value>& b,
                                     const std::vector<std::size_t>& shifts,
                                     const VariableWord& w,
                                     const std::vector<SequenceTable>& h, Value d) {
  check_variable_word(w);
  const std::size_t p = shifts.size();
  const std::size_t n = w.letters.size();
  if (p == 0 || b.size() != p + 1) throw BadBounds("need p >= 1 and |b| = p + 1");
  for (std::size_t j = 0; j < p; ++j) {
    if (shifts[j] == 0 || (j && shifts[j] <= shifts[j - 1])) {
      throw BadBounds("s must be strictly increasing and positive");
    }
  }
  if (h.size() != w.alphabet) throw BadBounds("need one sequence per letter");
  const std::size_t needed = n * shifts.back() + n;
  for (const auto& hi : h) {
    if (hi.size() < needed) {
      throw DomainTooSmall("h is defined up to " + std::to_string(hi.size()) +
                           ", the reduction needs " + std::to_string(needed));
    }
  }

  // Expand b₁ (d h(Ns₁+1) ⋯ d h(Ns₁+N)) b₂ ⋯ b_{p+1}; constants between
  // star slots fold into one padding entry.
  ChiArguments out;
  std::optional<Value> run;
  auto absorb = [&](Value v) { run = run ? s(*run, v) : v; };
  absorb(b[0]);
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t q = 1; q <= n; ++q) {
      absorb(d);
      const std::size_t slot = n * shifts[j] + q;
      const int letter = w.letters[q - 1];
      if (letter == kStar) {
        out.a.push_back(*run);
        run.reset();
        out.t.push_back(slot);
      } else {
        absorb(h[static_cast<std::size_t>(letter - 1)].at(slot));
      }
    }
    absorb(b[j + 1]);
  }
  out.a.push_back(*run);
  out.m = out.t.size();

  LineReduction result{out, {}};
  const ChiArguments original{p, b, shifts};
  for (int i = 1; i <= static_cast<int>(w.alphabet); ++i) {
    const auto g = gw_sequence(s, h, substitute(w, i), d, shifts.back());
    ReductionCheck check{i, chi_eval(s, out, h[static_cast<std::size_t>(i - 1)]),
                         chi_eval(s, original, g)};
    if (check.reduced != check.original) {
      throw VerificationFailed(static_cast<std::size_t>(i),
                               "reduced product " + std::to_string(check.reduced) +
                                   " differs from " + std::to_string(check.original) +
                                   " at letter " + std::to_string(i));
    }
    result.transcript.push_back(check);
  }
  return result;
}

const ChiArguments* CsetOutcome::find(std::uint64_t subfamily) const {
  for (const auto& e : entries) {
    if (e.subfamily == subfamily) return &e.witness;
  }
  return nullptr;
}

CsetOutcome cset_recursion(const Ambient& s, const Membership& in_a,
                           const std::vector<SequenceTable>& family,
                           const JBounds& bounds, std::size_t max_size) {
  if (family.empty()) throw EmptyInput("cset_recursion needs a nonempty family");
  if (family.size() > kMaxCsetFamily) {
    throw TooLarge("families are limited to " + std::to_string(kMaxCsetFamily) +
                   " sequences");
  }
  if (max_size == 0 || max_size > family.size()) max_size = family.size();

  CsetOutcome out;
  // Products of chains G₁ ⊊ … ⊊ G_n = G over processed subfamilies, keyed by G.
  std::map<std::uint64_t, std::set<Value>> chains;
  for (auto mask : subfamilies_by_size(family.size())) {
    const auto members = mask_members(mask);
    if (members.size() > max_size) break;

    std::size_t k = 0;
    std::set<Value> below;
    for (const auto& e : out.entries) {
      if ((e.subfamily & mask) != e.subfamily || e.subfamily == mask) continue;
      k = std::max(k, e.witness.t.back());
      below.insert(chains[e.subfamily].begin(), chains[e.subfamily].end());
    }
    Membership in_b = [&](Value x) {
      if (!in_a(x)) return false;
      for (Value mu : below) {
        auto v = try_product(s, mu, x);
        if (!v || !in_a(*v)) return false;
      }
      return true;
    };
    std::vector<SequenceTable> sub;
    for (auto i : members) sub.push_back(family[i]);
    auto found = find_j_witness(s, in_b, sub, bounds, k);
    if (!found) {
      out.failed_at = mask;
      out.diagnostics = "no witness for " + subfamily_text(mask) + " with t(1) > " +
                        std::to_string(k) + ", m <= " + std::to_string(bounds.m_max) +
                        ", t <= " + std::to_string(bounds.t_max) + " (" +
                        std::to_string(below.size()) + " chain products constrain B)";
      return out;
    }
    auto& mine = chains[mask];
    for (const auto& f : sub) {
      const Value x = chi_eval(s, *found, f);
      mine.insert(x);
      for (Value mu : below) mine.insert(s(mu, x));
    }
    out.entries.push_back({mask, *found});
  }
  out.complete = true;
  return out;
}

std::optional<CsetViolation> verify_c_witness(const Ambient& s, const Membership& in_a,
                                              const std::vector<SequenceTable>& family,
                                              const std::vector<CsetEntry>& entries) {
  for (const auto& f : entries) {
    for (const auto& g : entries) {
      const bool proper = (f.subfamily & g.subfamily) == f.subfamily &&
                          f.subfamily != g.subfamily;
      if (proper && f.witness.t.back() >= g.witness.t.front()) {
        return CsetViolation{'a', {f.subfamily, g.subfamily}, {}, 0};
      }
    }
  }

  std::vector<std::uint64_t> chain;
  std::vector<std::size_t> selection;
  std::optional<CsetViolation> bad;
  std::function<void(std::size_t, std::optional<Value>)> extend =
      [&](std::size_t last, std::optional<Value> acc) {
        for (std::size_t e = 0; e < entries.size() && !bad; ++e) {
          const auto mask = entries[e].subfamily;
          if (acc) {
            const auto prev = entries[last].subfamily;
            if ((prev & mask) != prev || prev == mask) continue;
          }
          for (auto i : mask_members(mask)) {
            if (i >= family.size()) {
              throw BadBounds("subfamily refers to sequence " + std::to_string(i));
            }
            chain.push_back(mask);
            selection.push_back(i);
            auto x = try_chi(s, entries[e].witness, family[i]);
            std::optional<Value> next;
            if (x) next = acc ? try_product(s, *acc, *x) : x;
            if (!next || !in_a(*next)) {
              bad = CsetViolation{'b', chain, selection, next.value_or(0)};
            } else {
              extend(e, next);
            }
            chain.pop_back();
            selection.pop_back();
            if (bad) return;
          }
        }
      };
  extend(0, std::nullopt);
  return bad;
}

std::string to_sequence_text(const SequenceTable& f) {
  std::ostringstream out;
  out << f.size() << '\n';
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out << ' ';
    out << f.values()[i];
  }
  out << '\n';
  return out.str();
}

SequenceTable parse_sequence(std::string_view source) {
  std::vector<std::pair<text::Token, std::size_t>> tokens;
  for (const auto& l : text::split_lines(source)) {
    for (const auto& t : text::split_tokens(l.text)) tokens.emplace_back(t, l.number);
  }
  if (tokens.empty()) throw ParseError(1, 1, "expected the sequence length");
  const auto len = text::to_integer(tokens[0].first, tokens[0].second);
  if (len < 0) throw ParseError(tokens[0].second, tokens[0].first.column, "negative length");
  if (static_cast<std::size_t>(len) + 1 != tokens.size()) {
    throw ParseError(tokens.back().second, 1,
                     "expected " + std::to_string(len) + " values, got " +
                         std::to_string(tokens.size() - 1));
  }
  std::vector<Value> values;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    values.push_back(text::to_integer(tokens[i].first, tokens[i].second));
  }
  return SequenceTable(std::move(values));
}

SequenceTable read_sequence_file(const std::filesystem::path& path) {
  return parse_sequence(text::read_file(path));
}

}  // namespace central
