#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "central/enumerate.hpp"
#include "central/error.hpp"
#include "central/jsets.hpp"
#include "central/words.hpp"
#include "oracles.hpp"

using namespace central;

namespace {

Word word(std::size_t k, std::vector<int> letters) { return {k, std::move(letters)}; }
VariableWord vword(std::size_t k, std::vector<int> letters) { return {k, std::move(letters)}; }

CubeColoring cube(std::size_t k, std::size_t n, std::size_t c, std::vector<int> values) {
  CubeColoring col{k, n, c, std::move(values)};
  col.validate();
  return col;
}

// Scans every letter tuple over {★, 1..k} in lexicographic order.
std::optional<std::vector<int>> mono_line_oracle(const CubeColoring& col) {
  const std::size_t k = col.alphabet, n = col.length;
  std::vector<int> v(n, 0);
  auto color_of = [&](const std::vector<int>& letters) {
    std::size_t idx = 0;
    for (int x : letters) idx = idx * k + static_cast<std::size_t>(x - 1);
    return col.values[idx];
  };
  while (true) {
    if (std::count(v.begin(), v.end(), 0) > 0) {
      std::set<int> seen;
      for (int a = 1; a <= static_cast<int>(k); ++a) {
        auto w = v;
        for (auto& x : w)
          if (x == 0) x = a;
        seen.insert(color_of(w));
      }
      if (seen.size() == 1) return v;
    }
    std::size_t i = n;
    while (i > 0 && v[i - 1] == static_cast<int>(k)) v[--i] = 0;
    if (i == 0) return std::nullopt;
    ++v[i - 1];
  }
}

// Lexicographically least (m, t, a) by plain nested enumeration.
std::optional<ChiArguments> j_oracle(const Ambient& s, const std::function<bool(Value)>& in_a,
                                     const std::vector<std::vector<Value>>& family,
                                     std::size_t m_max, std::size_t t_max,
                                     const std::vector<Value>& cands, std::size_t min_t) {
  for (std::size_t m = 1; m <= m_max; ++m) {
    std::vector<std::size_t> t;
    std::optional<ChiArguments> found;
    std::function<void(std::size_t)> pick_t = [&](std::size_t from) {
      if (found) return;
      if (t.size() == m) {
        std::vector<std::size_t> idx(m + 1, 0);
        while (!found) {
          std::vector<Value> a;
          for (auto i : idx) a.push_back(cands[i]);
          bool all = true;
          for (const auto& f : family) all = all && in_a(oracle::chi(s, a, t, f));
          if (all) found = ChiArguments{m, a, t};
          std::size_t i = m + 1;
          while (i > 0 && idx[i - 1] + 1 == cands.size()) idx[--i] = 0;
          if (i == 0) break;
          ++idx[i - 1];
        }
        return;
      }
      for (std::size_t x = from; x <= t_max && !found; ++x) {
        t.push_back(x);
        pick_t(x + 1);
        t.pop_back();
      }
    };
    pick_t(min_t + 1);
    if (found) return found;
  }
  return std::nullopt;
}

SequenceTable identity_seq(std::size_t n) {
  return SequenceTable::from_function(n, [](std::size_t i) { return static_cast<Value>(i); });
}
SequenceTable doubling_seq(std::size_t n) {
  return SequenceTable::from_function(n, [](std::size_t i) { return static_cast<Value>(2 * i); });
}

}  // namespace

TEST_CASE("variable words and lines") {
  CHECK(line(vword(2, {kStar, 1})) == std::vector<Word>{word(2, {1, 1}), word(2, {2, 1})});
  CHECK(line(vword(2, {kStar, kStar})) == std::vector<Word>{word(2, {1, 1}), word(2, {2, 2})});
  CHECK(line(vword(3, {2, kStar})) ==
        std::vector<Word>{word(3, {2, 1}), word(3, {2, 2}), word(3, {2, 3})});
  CHECK(vword(3, {kStar, 2, kStar}).stars() == std::vector<std::size_t>{1, 3});
  CHECK(to_string(vword(2, {kStar, 1})) == "(*,1)");
  CHECK_THROWS_AS(check_variable_word(vword(2, {1, 2})), NoStar);
  CHECK_THROWS_AS(check_word(word(2, {3})), InvariantViolation);
  CHECK_THROWS_AS(check_word(word(2, {kStar})), InvariantViolation);

  for (std::size_t i = 0; i < 27; ++i) CHECK(word_index(word_at(3, 3, i)) == i);
  CHECK(word_index(word(2, {2, 1})) == 2);
}

TEST_CASE("monochromatic lines: examples") {
  const auto diag = cube(2, 2, 2, {1, 2, 2, 1});
  const auto l = find_mono_line(diag);
  REQUIRE(l.has_value());
  CHECK(*l == vword(2, {kStar, kStar}));

  CHECK(*find_mono_line(cube(3, 1, 1, {1, 1, 1})) == vword(3, {kStar}));
  CHECK_FALSE(find_mono_line(cube(2, 1, 2, {1, 2})).has_value());

  CHECK_THROWS_AS(cube(2, 2, 2, {1, 2, 1}), InvariantViolation);
  CHECK_THROWS_AS(cube(2, 1, 2, {1, 3}), InvariantViolation);
}

TEST_CASE("monochromatic lines match the exhaustive scan") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 400; ++i) {
    const std::size_t k = 1 + rng() % 3, n = 1 + rng() % 3, c = 1 + rng() % 3;
    std::size_t cells = 1;
    for (std::size_t j = 0; j < n; ++j) cells *= k;
    std::vector<int> values(cells);
    for (auto& v : values) v = 1 + static_cast<int>(rng() % c);
    const auto col = cube(k, n, c, values);
    const auto got = find_mono_line(col);
    const auto want = mono_line_oracle(col);
    CHECK(got.has_value() == want.has_value());
    if (got && want) {
      CHECK(got->letters == *want);
      std::set<int> colors;
      for (const auto& w : line(*got)) colors.insert(col.color(w));
      CHECK(colors.size() == 1);
    }
  }
}

TEST_CASE("Hales-Jewett numbers at toy sizes") {
  const auto r = hj_number_search(2, 2, 3, 1u << 20);
  REQUIRE(r.number.has_value());
  CHECK(*r.number == 2);
  REQUIRE(r.levels.size() == 2);
  // The scan stops at the first line-free coloring, (1, 2).
  CHECK(r.levels[0].colorings_checked == 2);
  REQUIRE(r.levels[0].counterexample.has_value());
  CHECK(r.levels[0].counterexample->values == std::vector<int>{1, 2});
  // All 2^(2^2) colorings of the length-2 cube.
  CHECK(r.levels[1].colorings_checked == 16);
  CHECK_FALSE(r.levels[1].counterexample.has_value());

  CHECK(count_line_free_colorings(2, 3, 2, 1u << 20) == 0);
  CHECK(count_line_free_colorings(2, 1, 2, 1u << 20) == 2);

  CHECK(*hj_number_search(1, 3, 2, 100).number == 1);
  CHECK(*hj_number_search(2, 1, 2, 100).number == 1);

  try {
    hj_number_search(3, 3, 3, 1000);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    REQUIRE(e.progress.has_value());
    CHECK(*e.progress == 1);
  }

  std::mt19937_64 rng(23);
  for (std::size_t n = 2; n <= 5; ++n)
    for (int i = 0; i < 50; ++i) {
      std::vector<int> values(std::size_t{1} << n);
      for (auto& v : values) v = 1 + static_cast<int>(rng() % 2);
      CHECK(find_mono_line(cube(2, n, 2, values)).has_value());
    }
}

TEST_CASE("cube files") {
  const auto col = parse_cube("2 2 2\n1 2\n2 1\n");
  CHECK(col.values == std::vector<int>{1, 2, 2, 1});
  CHECK(parse_cube(to_cube_text(col)).values == col.values);
  CHECK_THROWS_AS(parse_cube("2 2 2\n1 2 2\n"), Error);
  CHECK_THROWS_AS(parse_cube("2 x 2\n"), ParseError);
}

TEST_CASE("alternating products") {
  const auto add = Ambient::additive();
  const auto id = identity_seq(10);
  CHECK(chi_eval(add, {1, {1, 1}, {3}}, id) == 5);
  CHECK(chi_eval(add, {2, {1, 1, 1}, {1, 2}}, id) == 6);
  const auto mod3 = SequenceTable::from_function(5, [](std::size_t n) { return Value(n % 3); });
  CHECK(chi_eval(Ambient::finite(cyclic_group(3)), {1, {1, 1}, {2}}, mod3) == 1);

  CHECK_THROWS_AS(chi_eval(add, {1, {1}, {3}}, id), BadBounds);
  CHECK_THROWS_AS(chi_eval(add, {2, {1, 1, 1}, {2, 2}}, id), BadBounds);
  CHECK_THROWS_AS(chi_eval(add, {1, {1, 1}, {11}}, id), UndefinedAt);
  CHECK_THROWS_AS(id.at(0), UndefinedAt);

  std::mt19937_64 rng(3);
  const auto carriers = all_semigroups_up_to(3);
  for (int i = 0; i < 300; ++i) {
    const auto& s = carriers[rng() % carriers.size()];
    const auto amb = Ambient::finite(s);
    std::vector<Value> f(8);
    for (auto& v : f) v = static_cast<Value>(rng() % s.order());
    const std::size_t m = 1 + rng() % 3;
    std::vector<std::size_t> t;
    for (std::size_t x = 1; t.size() < m; ++x)
      if (rng() % 2 || 8 - x < m - t.size()) t.push_back(x);
    std::vector<Value> a(m + 1);
    for (auto& v : a) v = static_cast<Value>(rng() % s.order());
    CHECK(chi_eval(amb, {m, a, t}, SequenceTable(f)) == oracle::chi(amb, a, t, f));
  }
}

TEST_CASE("J-set witness examples") {
  const auto add = Ambient::additive();
  auto evens = [](Value x) { return x >= 1 && x <= 100 && x % 2 == 0; };
  const auto w = find_j_witness(add, evens, {identity_seq(32)}, {});
  REQUIRE(w.has_value());
  CHECK(*w == ChiArguments{1, {1, 2}, {1}});

  const auto late = find_j_witness(add, evens, {identity_seq(32)}, {}, 3);
  REQUIRE(late.has_value());
  CHECK(*late == ChiArguments{1, {1, 1}, {4}});

  const auto l2 = Ambient::finite(left_zero(2));
  const auto lz = find_j_witness(l2, [](Value x) { return x == 0; },
                                 {SequenceTable(std::vector<Value>(16, 1))}, {});
  REQUIRE(lz.has_value());
  CHECK(lz->a.front() == 0);
  CHECK(*lz == ChiArguments{1, {0, 0}, {1}});

  CHECK_FALSE(find_j_witness(add, [](Value) { return false; }, {identity_seq(8)},
                             {1, 8, {}, 1'000'000})
                  .has_value());

  JBounds tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(find_j_witness(add, [](Value) { return false; }, {identity_seq(16)}, tiny),
                  BudgetExceeded);
}

TEST_CASE("J-set witnesses match the nested-loop oracle") {
  std::mt19937_64 rng(51);
  const auto carriers = all_semigroups_up_to(3);
  for (int i = 0; i < 150; ++i) {
    const auto& s = carriers[rng() % carriers.size()];
    const auto amb = Ambient::finite(s);
    const auto a_mask = rng() % (std::uint64_t{1} << s.order());
    auto in_a = [&](Value x) { return oracle::bit(a_mask, static_cast<std::size_t>(x)); };
    std::vector<std::vector<Value>> raw(1 + rng() % 2, std::vector<Value>(10));
    std::vector<SequenceTable> family;
    for (auto& f : raw) {
      for (auto& v : f) v = static_cast<Value>(rng() % s.order());
      family.emplace_back(f);
    }
    const std::size_t min_t = rng() % 3;
    JBounds bounds{2, 10, {}, 100'000'000};
    const auto got = find_j_witness(amb, in_a, family, bounds, min_t);
    const auto want = j_oracle(amb, in_a, raw, 2, 10, default_candidates(amb), min_t);
    CHECK(got.has_value() == want.has_value());
    if (got && want) CHECK(*got == *want);
    if (got) CHECK(got->t.front() > min_t);
  }
}

TEST_CASE("g_w sequences") {
  const auto add = Ambient::additive();
  const auto g1 = gw_sequence(add, {identity_seq(20)}, word(1, {1}), 1, 5);
  for (std::size_t l = 1; l <= 5; ++l) CHECK(g1.at(l) == static_cast<Value>(l) + 2);

  const auto g2 = gw_sequence(add, {identity_seq(40), doubling_seq(40)}, word(2, {1, 2}), 1, 6);
  for (std::size_t l = 1; l <= 6; ++l) CHECK(g2.at(l) == 6 * static_cast<Value>(l) + 7);

  CHECK_THROWS_AS(gw_sequence(add, {identity_seq(20)}, word(1, {}), 1, 5), DomainTooSmall);
  CHECK_THROWS_AS(gw_sequence(add, {identity_seq(5)}, word(1, {1}), 1, 5), DomainTooSmall);

  const auto all = build_gw(add, {identity_seq(40), doubling_seq(40)}, 2, 1, 6);
  CHECK(all.size() == 4);
  CHECK(all.at(word_index(word(2, {1, 2}))) == g2);
}

TEST_CASE("line reduction: worked example") {
  const auto add = Ambient::additive();
  const auto r = reduce_line_to_witness(add, {1, 1}, {1}, vword(2, {kStar, 1}),
                                        {identity_seq(40), doubling_seq(40)}, 1);
  CHECK(r.witness == ChiArguments{1, {2, 6}, {3}});
  REQUIRE(r.transcript.size() == 2);
  CHECK(r.transcript[0].reduced == 11);
  CHECK(r.transcript[0].original == 11);
  CHECK(r.transcript[1].reduced == 14);
  CHECK(r.transcript[1].original == 14);

  const auto one = reduce_line_to_witness(add, {2, 3}, {2}, vword(1, {kStar, kStar}),
                                          {identity_seq(40)}, 1);
  REQUIRE(one.transcript.size() == 1);
  CHECK(one.transcript[0].reduced == one.transcript[0].original);
  CHECK(one.witness.m == 2);

  CHECK_THROWS_AS(reduce_line_to_witness(add, {1, 1}, {1}, vword(2, {1, 2}),
                                         {identity_seq(40), doubling_seq(40)}, 1),
                  NoStar);
}

TEST_CASE("line reduction agrees with direct expansion on random instances") {
  std::mt19937_64 rng(1234);
  auto carriers = all_semigroups_up_to(3);
  for (auto& s : sample_semigroups(4, 20, 9)) carriers.push_back(s);
  int checked = 0;
  for (int i = 0; i < 240; ++i) {
    const int kind = i % 3;
    Ambient amb = Ambient::additive();
    std::function<Value()> draw = [&] { return static_cast<Value>(1 + rng() % 5); };
    if (kind == 1) {
      amb = Ambient::multiplicative();
      draw = [&] { return static_cast<Value>(1 + rng() % 2); };
    } else if (kind == 2) {
      const auto& s = carriers[rng() % carriers.size()];
      amb = Ambient::finite(s);
      draw = [&, n = s.order()] { return static_cast<Value>(rng() % n); };
    }
    const std::size_t k = 1 + rng() % 3, n = 1 + rng() % 4, p = 1 + rng() % 3;
    std::vector<int> letters(n);
    for (auto& x : letters) x = static_cast<int>(rng() % (k + 1));
    letters[rng() % n] = kStar;
    const VariableWord w{k, letters};
    std::vector<std::size_t> shifts;
    for (std::size_t x = 1; shifts.size() < p; ++x)
      if (rng() % 2) shifts.push_back(x);
    std::vector<Value> b(p + 1);
    for (auto& x : b) x = draw();
    const Value d = kind == 1 ? 1 : draw();
    const std::size_t len = n * (shifts.back() + 1) + 1;
    std::vector<std::vector<Value>> raw(k, std::vector<Value>(len));
    std::vector<SequenceTable> h;
    for (auto& f : raw) {
      for (auto& v : f) v = draw();
      h.emplace_back(f);
    }

    const auto r = reduce_line_to_witness(amb, b, shifts, w, h, d);
    CHECK(r.witness.m == p * w.stars().size());
    CHECK(std::is_sorted(r.witness.t.begin(), r.witness.t.end()));
    REQUIRE(r.transcript.size() == k);
    for (int letter = 1; letter <= static_cast<int>(k); ++letter) {
      // g_{w(letter)}(l) = ∏ d·h_{w_i}(N·l + i), evaluated by hand.
      const auto wl = substitute(w, letter);
      std::vector<Value> g(shifts.back());
      for (std::size_t l = 1; l <= g.size(); ++l) {
        std::optional<Value> acc;
        for (std::size_t j = 1; j <= n; ++j) {
          const Value f = amb(d, raw[static_cast<std::size_t>(wl.letters[j - 1] - 1)][n * l + j - 1]);
          acc = acc ? amb(*acc, f) : f;
        }
        g[l - 1] = *acc;
      }
      const Value original = oracle::chi(amb, b, shifts, g);
      const Value reduced =
          oracle::chi(amb, r.witness.a, r.witness.t, raw[static_cast<std::size_t>(letter - 1)]);
      CHECK(original == reduced);
      CHECK(r.transcript[static_cast<std::size_t>(letter - 1)].original == original);
      ++checked;
    }
  }
  CHECK(checked >= 200);
}

TEST_CASE("central-set recursion") {
  const auto add = Ambient::additive();
  auto mult4 = [](Value x) { return x >= 1 && x <= 2000 && x % 4 == 0; };
  const std::vector<SequenceTable> fam{identity_seq(64), doubling_seq(64)};
  const auto out = cset_recursion(add, mult4, fam, {});
  REQUIRE(out.complete);
  REQUIRE(out.entries.size() == 3);
  CHECK(*out.find(0b01) == ChiArguments{1, {1, 2}, {1}});
  CHECK(*out.find(0b10) == ChiArguments{1, {1, 1}, {1}});
  CHECK(*out.find(0b11) == ChiArguments{1, {1, 3}, {4}});
  CHECK_FALSE(verify_c_witness(add, mult4, fam, out.entries).has_value());

  const auto l2 = Ambient::finite(left_zero(2));
  const auto lz = cset_recursion(l2, [](Value) { return true; },
                                 {SequenceTable(std::vector<Value>(8, 1))}, {});
  REQUIRE(lz.complete);
  CHECK(lz.entries.front().witness.m == 1);

  const auto none = cset_recursion(add, [](Value) { return false; }, fam, {1, 8, {}, 100000});
  CHECK_FALSE(none.complete);
  REQUIRE(none.failed_at.has_value());
  CHECK(*none.failed_at == 0b01);
  CHECK_FALSE(none.diagnostics.empty());

  // Ordering defect: the pair's witness starts no later than {id} ends.
  auto bad_a = out.entries;
  for (auto& e : bad_a)
    if (e.subfamily == 0b11) e.witness = ChiArguments{1, {1, 3}, {1}};
  const auto va = verify_c_witness(add, mult4, fam, bad_a);
  REQUIRE(va.has_value());
  CHECK(va->condition == 'a');

  // Membership defect: 1 + 2 + 2 = 5 is not a multiple of 4.
  auto bad_b = out.entries;
  for (auto& e : bad_b)
    if (e.subfamily == 0b10) e.witness = ChiArguments{1, {1, 2}, {1}};
  const auto vb = verify_c_witness(add, mult4, fam, bad_b);
  REQUIRE(vb.has_value());
  CHECK(vb->condition == 'b');
}

TEST_CASE("recursion output always verifies") {
  std::mt19937_64 rng(606);
  const auto carriers = all_semigroups_up_to(3);
  int complete = 0;
  for (int i = 0; i < 120; ++i) {
    const auto& s = carriers[rng() % carriers.size()];
    const auto amb = Ambient::finite(s);
    const auto a_mask = 1 + rng() % ((std::uint64_t{1} << s.order()) - 1);
    auto in_a = [&](Value x) { return oracle::bit(a_mask, static_cast<std::size_t>(x)); };
    std::vector<SequenceTable> fam;
    for (std::size_t j = 0, n = 1 + rng() % 3; j < n; ++j) {
      std::vector<Value> f(24);
      for (auto& v : f) v = static_cast<Value>(rng() % s.order());
      fam.emplace_back(f);
    }
    const auto out = cset_recursion(amb, in_a, fam, {2, 24, {}, 10'000'000});
    if (out.complete) ++complete;
    CHECK_FALSE(verify_c_witness(amb, in_a, fam, out.entries).has_value());
  }
  CHECK(complete > 0);
}

TEST_CASE("sequence files") {
  const auto f = parse_sequence("3\n5 7 9\n");
  CHECK(f.values() == std::vector<Value>{5, 7, 9});
  CHECK(parse_sequence(to_sequence_text(f)) == f);
  CHECK_THROWS_AS(parse_sequence("3\n5 7\n"), Error);
  CHECK_THROWS_AS(parse_sequence("3\n5 x 9\n"), ParseError);
}
