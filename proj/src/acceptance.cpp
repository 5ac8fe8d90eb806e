#include "central/acceptance.hpp"

#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "central/enumerate.hpp"
#include "central/error.hpp"

namespace central {

namespace {

using Rng = std::mt19937_64;

Value uniform(Rng& rng, Value lo, Value hi) {
  return std::uniform_int_distribution<Value>(lo, hi)(rng);
}

const std::vector<FiniteSemigroup>& small_semigroups() {
  static const auto all = all_semigroups_up_to(3);
  return all;
}

// Pools by order 1..4; order 4 is the full backtracked list.
const std::vector<std::vector<FiniteSemigroup>>& pools_up_to_four() {
  static const auto pools = [] {
    std::vector<std::vector<FiniteSemigroup>> out;
    for (std::size_t n = 1; n <= 4; ++n) {
      out.push_back(n <= 3 ? all_semigroups_by_scan(n) : all_semigroups(n));
    }
    return out;
  }();
  return pools;
}

const FiniteSemigroup& random_semigroup(Rng& rng) {
  const auto& pools = pools_up_to_four();
  const auto& pool = pools[static_cast<std::size_t>(uniform(rng, 0, 3))];
  return pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<Value>(pool.size()) - 1))];
}

std::string table_text(const FiniteSemigroup& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.table().size(); ++i) {
    if (i) out += i % s.order() ? " " : " | ";
    out += std::to_string(s.table()[i]);
  }
  return out + "]";
}

std::string set_text(const ElementSet& a) {
  std::string out = "{";
  bool first = true;
  for (auto x : a.members()) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

// Records the first counterexample only.
struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::string first;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (ok) return;
    if (violations++ == 0) first = describe();
  }

  CriterionResult result(int id, std::string name, std::string summary) const {
    CriterionResult r{id, std::move(name), violations == 0, checked, violations, std::move(summary)};
    if (violations) r.detail += "; first counterexample: " + first;
    return r;
  }
};

template <class Visit>
void for_each_subset(const FiniteSemigroup& s, Visit&& visit) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s.order()); ++mask) {
    visit(ElementSet::from_mask(s.order(), mask));
  }
}

CriterionResult piecewise_syndetic_vs_kernel(const SuiteConfig&) {
  Tally t;
  for (const auto& s : small_semigroups()) {
    const auto ideals = ideal_structure(s);
    for_each_subset(s, [&](const ElementSet& a) {
      const bool pws = piecewise_syndetic_witness(s, a).has_value();
      t.check(pws == ideals.kernel.intersects(a), [&] {
        return "S=" + table_text(s) + " A=" + set_text(a);
      });
    });
  }
  return t.result(1, "piecewise syndetic iff A meets the kernel",
                  std::to_string(small_semigroups().size()) +
                      " semigroups of order <= 3, " + std::to_string(t.checked) + " sets");
}

CriterionResult largeness_chain(const SuiteConfig&) {
  Tally t;
  for (const auto& s : small_semigroups()) {
    const auto ideals = ideal_structure(s);
    for_each_subset(s, [&](const ElementSet& a) {
      const auto p = largeness_profile(s, ideals, a);
      auto where = [&] { return "S=" + table_text(s) + " A=" + set_text(a); };
      t.check(!p.is_thick() || p.is_central(), where);
      t.check(!p.is_central() || p.is_piecewise_syndetic(), where);
      t.check(!p.is_syndetic() || p.is_piecewise_syndetic(), where);
    });
  }
  return t.result(2, "thick => central => piecewise syndetic",
                  std::to_string(t.checked) + " implications over order <= 3");
}

CriterionResult shift_spectrum(const SuiteConfig&) {
  Tally t;
  for (const auto& s : small_semigroups()) {
    for_each_subset(s, [&](const ElementSet& a) {
      t.check(central_shift_spectrum(s, a).agree(), [&] {
        return "S=" + table_text(s) + " A=" + set_text(a);
      });
    });
  }
  return t.result(3, "pws <=> central-shift spectrum syndetic <=> spectrum nonempty",
                  std::to_string(t.checked) + " sets over order <= 3");
}

CriterionResult cwpws_vs_kernel(const SuiteConfig&) {
  Tally t;
  for (const auto& s : small_semigroups()) {
    const std::uint64_t subsets = std::uint64_t{1} << s.order();
    for (std::uint64_t a = 0; a < subsets; ++a) {
      for (std::uint64_t b = a; b < subsets; ++b) {
        std::vector<ElementSet> sets{ElementSet::from_mask(s.order(), a)};
        if (b != a) sets.push_back(ElementSet::from_mask(s.order(), b));
        const SetFamily fam(s, sets);
        const auto r = cwpws_check(fam);
        t.check(r.agree, [&] {
          std::string out = "S=" + table_text(s) + " family=";
          for (const auto& c : sets) out += set_text(c);
          return out;
        });
      }
    }
  }
  return t.result(4, "cwpws direct search agrees with kernel oracle",
                  std::to_string(t.checked) + " families of <= 2 sets over order <= 3");
}

CriterionResult fp_trees_are_star_trees(const SuiteConfig& config) {
  Rng rng(config.seed ^ 0x5f1a7e3dULL);
  Tally t;
  std::uint64_t fp = 0, nodes = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto& s = random_semigroup(rng);
    std::vector<Value> a;
    while (a.empty()) {
      for (Element x = 0; x < s.order(); ++x) {
        if (uniform(rng, 0, 1)) a.push_back(x);
      }
    }
    const auto depth = static_cast<std::size_t>(uniform(rng, 1, 4));
    const auto tree = build_fp_tree(Ambient::finite(s), a, depth);
    const auto c = classify_tree(tree);
    fp += c.is_fp_tree;
    nodes += tree.size();
    t.check(c.is_star_tree, [&] {
      std::string out = "S=" + table_text(s) + " A={";
      for (auto x : a) out += std::to_string(x) + " ";
      return out + "} depth=" + std::to_string(depth);
    });
  }
  return t.result(5, "built FP-trees are *-trees",
                  "1000 seeded trees (order <= 4, depth <= 4, " + std::to_string(nodes) +
                      " nodes); " + std::to_string(fp) + " also classify as FP-trees");
}

CriterionResult hales_jewett_two_two(const SuiteConfig&) {
  Tally t;
  const auto r = hj_number_search(2, 2, 3, std::uint64_t{1} << 20);
  t.check(r.number == std::size_t{2}, [&] {
    return "number=" + (r.number ? std::to_string(*r.number) : std::string("none"));
  });
  t.check(r.levels.size() == 2 && r.levels[0].counterexample.has_value(),
          [] { return std::string("N=1 not refuted by an explicit coloring"); });
  if (r.levels[0].counterexample) {
    t.check(!find_mono_line(*r.levels[0].counterexample),
            [] { return std::string("N=1 counterexample has a line"); });
  }
  t.check(r.levels.size() == 2 && r.levels[1].colorings_checked == 16 &&
              !r.levels[1].counterexample,
          [] { return std::string("N=2 not verified over all 16 colorings"); });
  // The property persists at longer words; N=4 is the full 2^16 colorings.
  const auto free3 = count_line_free_colorings(2, 3, 2, std::uint64_t{1} << 20);
  const auto free4 = count_line_free_colorings(2, 4, 2, std::uint64_t{1} << 20);
  t.check(free3 == 0, [&] { return std::to_string(free3) + " line-free colorings at N=3"; });
  t.check(free4 == 0, [&] { return std::to_string(free4) + " line-free colorings at N=4"; });
  return t.result(6, "Hales-Jewett number for k=2, c=2 is 2",
                  "N=1 refuted by an explicit coloring; N=2 verified over its 16 colorings; "
                  "N=3 (256) and N=4 (65536 colorings) have no line-free coloring");
}

CriterionResult line_reduction(const SuiteConfig& config) {
  Rng rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const int kind = i % 3;
    std::optional<FiniteSemigroup> table;
    Ambient s = Ambient::additive();
    Value lo = 1, hi = 9;
    if (kind == 1) {
      s = Ambient::multiplicative();
      hi = 4;
    } else if (kind == 2) {
      table = random_semigroup(rng);
      s = Ambient::finite(*table);
      lo = 0;
      hi = static_cast<Value>(table->order()) - 1;
    }
    const auto p = static_cast<std::size_t>(uniform(rng, 1, 3));
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 4));
    const auto k = static_cast<std::size_t>(uniform(rng, 1, 3));

    std::vector<std::size_t> shifts;
    while (shifts.size() < p) {
      std::size_t next = shifts.empty() ? 1 : shifts.back() + 1;
      next += static_cast<std::size_t>(uniform(rng, 0, 1));
      shifts.push_back(next);
    }
    std::vector<Value> b(p + 1);
    for (auto& v : b) v = uniform(rng, lo, hi);
    VariableWord w{k, std::vector<int>(n)};
    for (auto& letter : w.letters) letter = static_cast<int>(uniform(rng, 0, static_cast<Value>(k)));
    w.letters[static_cast<std::size_t>(uniform(rng, 0, static_cast<Value>(n) - 1))] = kStar;
    std::vector<SequenceTable> h;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Value> values(n * shifts.back() + n);
      for (auto& v : values) v = uniform(rng, lo, hi);
      h.emplace_back(std::move(values));
    }
    const Value d = uniform(rng, lo, hi);

    bool ok = true;
    std::string why;
    try {
      const auto r = reduce_line_to_witness(s, b, shifts, w, h, d);
      ok = r.witness.m == p * w.stars().size() && r.transcript.size() == k;
      for (const auto& c : r.transcript) ok = ok && c.reduced == c.original;
      if (!ok) why = "shape or transcript mismatch";
    } catch (const VerificationFailed& e) {
      ok = false;
      why = e.what();
    }
    t.check(ok, [&] {
      return s.name() + " w=" + to_string(w) + " p=" + std::to_string(p) + ": " + why;
    });
  }
  return t.result(7, "word reduction reproduces the line products",
                  "200 seeded instances over (N,+), (N,*) and finite semigroups of order <= 4");
}

CriterionResult dynamical_centrality(const SuiteConfig&) {
  Tally t;
  for (const auto& s : small_semigroups()) {
    const auto sys = ShiftSystem::build(s);
    for_each_subset(s, [&](const ElementSet& a) {
      const auto r = dynamically_central(sys, a);
      const bool algebraic = is_central(s, a);
      t.check(r.dynamically_central() == algebraic && r.agree(), [&] {
        return "S=" + table_text(s) + " A=" + set_text(a);
      });
    });
    const auto bad = check_proximal_recurrent_retraction(sys);
    t.check(!bad, [&] {
      return "S=" + table_text(s) + " proximal pair (" + point_text(sys, bad->x) + ", " +
             point_text(sys, bad->y) + ") has no minimal idempotent retraction";
    });
  }
  return t.result(8, "dynamically central iff central",
                  std::to_string(t.checked) +
                      " checks over order <= 3, including the proximal/recurrent retraction");
}

CriterionResult recurrence_agreement(const SuiteConfig&) {
  Tally t;
  for (const auto& s : small_semigroups()) {
    const auto sys = ShiftSystem::build(s);
    for (Point x = 0; x < sys.points(); ++x) {
      t.check(uniform_recurrence(sys, x).agree(), [&] {
        return "S=" + table_text(s) + " x=" + point_text(sys, x);
      });
    }
  }
  return t.result(9, "three characterizations of uniform recurrence agree",
                  std::to_string(t.checked) + " points over order <= 3");
}

CriterionResult odd_numbers_and_sparse_fs(const SuiteConfig&) {
  Tally t;
  const auto odds = WindowSet::periodic(200, 2, {1});
  const auto pws = window_piecewise_syndetic(odds, 50, 2);
  t.check(pws.witnessed() && verify_piecewise_syndetic(odds, 50, *pws.witness) &&
              pws.witness->shifts == std::vector<Value>{1, 2},
          [&] { return "odds pws: " + pws.note; });
  const auto fs2 = find_fs_basis(odds, 2, Combine::additive);
  t.check(fs2.refuted(), [&] { return "odds FS k=2: " + fs2.note; });

  const auto planted = combination_closure({3, 30, 300}, Combine::additive, 1000);
  const WindowSet sparse(1000, planted.values);
  const auto fs3 = find_fs_basis(sparse, 3, Combine::additive);
  t.check(fs3.witnessed() && verify_fs(sparse, 3, Combine::additive, *fs3.witness) &&
              fs3.witness->basis == std::vector<Value>{3, 30, 300},
          [&] { return "planted FS: " + fs3.note; });
  const auto syn = window_syndetic(sparse, 10);
  t.check(syn.refuted(), [&] { return "planted syndetic: " + syn.note; });
  return t.result(10, "odd numbers and a planted sparse FS set",
                  "odds in [1,200]: pws with G={1,2}, L=50, no 2-element FS basis; "
                  "FS({3,30,300}) in [1,1000]: FS witnessed, syndetic (g=10) refuted");
}

CriterionResult bergelson_witnesses(const SuiteConfig& config) {
  Rng rng(config.seed ^ 0x2545f4914f6cdd1dULL);
  Tally t;
  int witnessed = 0;
  for (int i = 0; i < 50; ++i) {
    std::vector<int> values(500);
    for (auto& v : values) v = static_cast<int>(uniform(rng, 1, 2));
    const Coloring col(2, values);
    const auto r = bergelson_search(col);
    if (!r.witnessed()) continue;
    ++witnessed;
    const auto& w = *r.witness;
    t.check(verify_bergelson(col, w), [&] {
      return "coloring " + std::to_string(i) + " witness (" + std::to_string(w.a) + "," +
             std::to_string(w.b) + "," + std::to_string(w.c) + "," + std::to_string(w.d) + ")";
    });
  }
  return t.result(11, "every emitted x+y=w*z witness verifies",
                  "50 seeded 2-colorings of [1,500]; " + std::to_string(witnessed) +
                      " witnesses emitted and re-verified");
}

}  // namespace

std::vector<CriterionResult> run_criteria(const SuiteConfig& config) {
  using Criterion = CriterionResult (*)(const SuiteConfig&);
  const std::vector<Criterion> criteria{
      piecewise_syndetic_vs_kernel, largeness_chain,      shift_spectrum,
      cwpws_vs_kernel,              fp_trees_are_star_trees, hales_jewett_two_two,
      line_reduction,               dynamical_centrality,  recurrence_agreement,
      odd_numbers_and_sparse_fs,    bergelson_witnesses};
  // Shared pools are built before any worker starts.
  small_semigroups();
  pools_up_to_four();

  std::vector<CriterionResult> results(criteria.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < criteria.size();) {
      try {
        results[i] = criteria[i](config);
      } catch (const std::exception& e) {
        results[i] = CriterionResult{static_cast<int>(i + 1), "criterion " + std::to_string(i + 1),
                                     false, 0, 1, std::string("threw: ") + e.what()};
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, criteria.size()));
  std::vector<std::thread> threads;
  for (unsigned j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& th : threads) th.join();
  return results;
}

CriterionResult run_determinism(const SuiteConfig& config) {
  const auto first = to_json(run_criteria(config)).dump();
  const auto second = to_json(run_criteria(config)).dump();
  CriterionResult r{12, "identical reports for identical seeds", first == second, 2,
                    first == second ? 0u : 1u,
                    "criteria 1-11 run twice with seed " + std::to_string(config.seed) + "; " +
                        std::to_string(first.size()) + "-byte structured reports " +
                        (first == second ? "identical" : "differ")};
  return r;
}

std::vector<CriterionResult> run_acceptance(const SuiteConfig& config) {
  auto results = run_criteria(config);
  results.push_back(run_determinism(config));
  return results;
}

Json to_json(const CriterionResult& r) {
  return Json{{"id", r.id},
              {"name", r.name},
              {"passed", r.passed},
              {"checked", r.checked},
              {"violations", r.violations},
              {"detail", r.detail}};
}

Json to_json(const std::vector<CriterionResult>& results) {
  Json out = Json::array();
  for (const auto& r : results) out.push_back(to_json(r));
  return out;
}

std::string pass_fail_lines(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name << " (checked "
        << r.checked << ", violations " << r.violations << "): " << r.detail << '\n';
  }
  return out.str();
}

}  // namespace central
