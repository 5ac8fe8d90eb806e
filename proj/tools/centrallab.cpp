// centrallab: command-line front end for the central-sets laboratory.
//
// Exit codes: 0 success, 1 a negative answer (refuted, not central, no
// witness, failed suite), 2 bad input or an exhausted budget, 3 a witness
// failed its own verification (a bug, never expected).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "central/acceptance.hpp"
#include "central/dynamics.hpp"
#include "central/error.hpp"
#include "central/families.hpp"
#include "central/ideals.hpp"
#include "central/jsets.hpp"
#include "central/largeness.hpp"
#include "central/report.hpp"
#include "central/trees.hpp"
#include "central/window.hpp"
#include "central/words.hpp"

using namespace central;

namespace {

struct Globals {
  std::uint64_t seed = 20240917;
  std::uint64_t budget = 10'000'000;
  unsigned jobs = 1;
  std::string format = "text";
  std::string out;
  bool timing = false;
};

struct Outcome {
  Json config;
  Json result;
  int exit = 0;
  std::string text;  // overrides the flattened text rendering when set
};

using Action = std::function<Outcome()>;

std::uint64_t default_budget() {
  if (const char* env = std::getenv("CENTRALLAB_BUDGET")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw BadBounds("CENTRALLAB_BUDGET must be a positive integer");
  }
  return 10'000'000;
}

// "0,2,3" -> {0, 2, 3}; "-" or "" is the empty list.
std::vector<Element> parse_elements(const std::string& text) {
  std::vector<Element> out;
  if (text.empty() || text == "-") return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 0) throw BadBounds("bad element list '" + text + "'");
    out.push_back(static_cast<Element>(v));
  }
  return out;
}

ElementSet element_set(const FiniteSemigroup& s, const std::string& text) {
  const auto members = parse_elements(text);
  for (Element x : members) s.check_element(x);
  return ElementSet(s.order(), members);
}

Ambient parse_carrier(const std::string& name) {
  if (name == "additive") return Ambient::additive();
  if (name == "multiplicative") return Ambient::multiplicative();
  return Ambient::finite(read_cayley_file(name));
}

Point parse_point(const ShiftSystem& sys, const std::string& bits) {
  if (bits.size() != sys.q_size() ||
      bits.find_first_not_of("01") != std::string::npos) {
    throw BadBounds("a point is " + std::to_string(sys.q_size()) +
                    " binary digits, e first");
  }
  return static_cast<Point>(std::stoul(bits, nullptr, 2));
}

Combine parse_mode(const std::string& mode) {
  return mode == "multiplicative" ? Combine::multiplicative : Combine::additive;
}

template <class W, class Check>
void check_emitted(const Verdict<W>& v, Check&& check, const char* what) {
  if (v.witnessed() && !check(*v.witness)) throw VerificationFailed(0, what);
}

void verify_largeness(const WindowSet& a, Value len, const WindowLargeness& l) {
  check_emitted(l.thick, [&](const ThickWitness& w) { return verify_thick(a, len, w); },
                "thick witness");
  check_emitted(l.syndetic, [&](const SyndeticWitness& w) { return verify_syndetic(a, w); },
                "syndetic witness");
  check_emitted(l.piecewise_syndetic,
                [&](const PwsWindowWitness& w) { return verify_piecewise_syndetic(a, len, w); },
                "piecewise syndetic witness");
}

// ---------------------------------------------------------------- commands

void add_semigroup(CLI::App& app, Action& action) {
  auto* group = app.add_subcommand("semigroup", "finite semigroups from Cayley tables");
  group->require_subcommand(1);

  auto path = std::make_shared<std::string>();
  auto set = std::make_shared<std::string>();

  auto* analyze = group->add_subcommand("analyze", "minimal ideals, kernel and idempotents");
  analyze->add_option("table", *path, "Cayley table file")->required();
  analyze->callback([&action, path] {
    action = [path] {
      const auto s = read_cayley_file(*path);
      return Outcome{{{"table", *path}},
                     {{"order", s.order()}, {"ideals", to_json(ideal_structure(s))}}};
    };
  });

  auto* central = group->add_subcommand("central", "largeness profile of a subset");
  central->add_option("table", *path, "Cayley table file")->required();
  central->add_option("--set", *set, "elements of A, comma separated")->required();
  central->callback([&action, path, set] {
    action = [path, set] {
      const auto s = read_cayley_file(*path);
      const auto a = element_set(s, *set);
      const auto p = largeness_profile(s, a);
      return Outcome{{{"table", *path}, {"set", to_json(a)}},
                     {{"profile", to_json(p)}, {"central", p.is_central()}},
                     p.is_central() ? 0 : 1};
    };
  });

  auto* equiv = group->add_subcommand(
      "equivalences", "piecewise syndetic vs. the central shift spectrum, three ways");
  equiv->add_option("table", *path, "Cayley table file")->required();
  equiv->add_option("--set", *set, "elements of A, comma separated")->required();
  equiv->callback([&action, path, set] {
    action = [path, set] {
      const auto s = read_cayley_file(*path);
      const auto a = element_set(s, *set);
      const auto spectrum = central_shift_spectrum(s, a);
      return Outcome{{{"table", *path}, {"set", to_json(a)}}, to_json(spectrum),
                     spectrum.agree() ? 0 : 1};
    };
  });
}

void add_window(CLI::App& app, Action& action) {
  auto* group = app.add_subcommand("window", "bounded-window analysis of subsets of N");
  group->require_subcommand(1);

  struct Opts {
    std::string path;
    Value gap = 8, len = 50, radius = 4, divisor = 2;
    std::size_t k = 2;
    std::string mode = "additive";
  };
  auto o = std::make_shared<Opts>();

  auto* largeness = group->add_subcommand("largeness", "thick, syndetic, piecewise syndetic");
  largeness->add_option("window", o->path, "window set file")->required();
  largeness->add_option("-g,--gap", o->gap, "syndetic gap bound")->capture_default_str();
  largeness->add_option("-L,--length", o->len, "interval length")->capture_default_str();
  largeness->add_option("-r,--radius", o->radius, "shift radius for G")->capture_default_str();
  largeness->callback([&action, o] {
    action = [o] {
      const auto a = read_window_file(o->path);
      const auto l = window_largeness(a, o->gap, o->len, o->radius);
      verify_largeness(a, o->len, l);
      return Outcome{{{"window", o->path}, {"gap", o->gap}, {"length", o->len},
                      {"radius", o->radius}},
                     to_json(l)};
    };
  });

  auto* fs = group->add_subcommand("fs", "least finite-sum or finite-product basis");
  fs->add_option("window", o->path, "window set file")->required();
  fs->add_option("-k", o->k, "basis size")->capture_default_str();
  fs->add_option("--mode", o->mode, "additive or multiplicative")
      ->check(CLI::IsMember({"additive", "multiplicative"}))
      ->capture_default_str();
  fs->callback([&action, o] {
    action = [o] {
      const auto a = read_window_file(o->path);
      const auto mode = parse_mode(o->mode);
      const auto v = find_fs_basis(a, o->k, mode);
      check_emitted(v, [&](const FsWitness& w) { return verify_fs(a, o->k, mode, w); },
                    "basis");
      return Outcome{{{"window", o->path}, {"k", o->k}, {"mode", o->mode}}, to_json(v),
                     v.refuted() ? 1 : 0};
    };
  });

  auto* berg = group->add_subcommand("bergelson", "monochromatic a + b = c*d");
  berg->add_option("coloring", o->path, "coloring file")->required();
  berg->callback([&action, o] {
    action = [o] {
      const auto v = bergelson_search(read_coloring_file(o->path));
      return Outcome{{{"coloring", o->path}}, to_json(v), v.refuted() ? 1 : 0};
    };
  });

  auto* scan = group->add_subcommand("scan", "largeness and bases of every color class");
  scan->add_option("coloring", o->path, "coloring file")->required();
  scan->add_option("-g,--gap", o->gap, "syndetic gap bound")->capture_default_str();
  scan->add_option("-L,--length", o->len, "interval length")->capture_default_str();
  scan->add_option("-r,--radius", o->radius, "shift radius for G")->capture_default_str();
  scan->add_option("-k", o->k, "largest basis size")->capture_default_str();
  scan->callback([&action, o] {
    action = [o] {
      const auto col = read_coloring_file(o->path);
      Json classes = Json::array();
      for (const auto& c : partition_scan(col, o->gap, o->len, o->radius, o->k)) {
        verify_largeness(c.members, o->len, c.largeness);
        classes.push_back(to_json(c));
      }
      return Outcome{{{"coloring", o->path}, {"gap", o->gap}, {"length", o->len},
                      {"radius", o->radius}, {"k", o->k}},
                     {{"classes", classes}}};
    };
  });

  auto* div = group->add_subcommand("div", "A/n = {m : mn in A}");
  div->add_option("window", o->path, "window set file")->required();
  div->add_option("-n", o->divisor, "divisor")->capture_default_str();
  div->callback([&action, o] {
    action = [o] {
      const auto a = read_window_file(o->path);
      return Outcome{{{"window", o->path}, {"n", o->divisor}},
                     to_json(div_set(a, o->divisor))};
    };
  });
}

void add_trees(CLI::App& app, Action& action) {
  auto* group = app.add_subcommand("trees", "FP-trees and *-trees");
  group->require_subcommand(1);

  struct Opts {
    std::string path, carrier, set, save;
    std::size_t depth = 3;
  };
  auto o = std::make_shared<Opts>();

  auto* classify = group->add_subcommand("classify", "classify a tree file");
  classify->add_option("tree", o->path, "tree file")->required();
  classify->callback([&action, o] {
    action = [o] {
      const auto t = read_tree_file(o->path);
      return Outcome{{{"tree", o->path}},
                     {{"nodes", t.size()}, {"depth", t.depth()},
                      {"classification", to_json(classify_tree(t))}}};
    };
  });

  auto* build = group->add_subcommand("build", "build the FP-tree of A to a given depth");
  build->add_option("carrier", o->carrier, "Cayley table file, additive or multiplicative")
      ->required();
  build->add_option("--set", o->set, "elements of A, comma separated")->required();
  build->add_option("--depth", o->depth, "levels below the root")->capture_default_str();
  build->add_option("--save", o->save, "write the tree file here");
  build->callback([&action, o] {
    action = [o] {
      const auto carrier = parse_carrier(o->carrier);
      std::vector<Value> a;
      for (Element x : parse_elements(o->set)) a.push_back(x);
      const auto t = build_fp_tree(carrier, a, o->depth);
      if (!o->save.empty()) {
        std::ofstream file(o->save);
        file << to_tree_text(t, o->carrier);
        if (!file) throw Error("cannot write " + o->save);
      }
      return Outcome{{{"carrier", o->carrier}, {"set", a}, {"depth", o->depth}},
                     {{"nodes", t.size()}, {"classification", to_json(classify_tree(t))}}};
    };
  });
}

void add_families(CLI::App& app, Action& action) {
  auto* group = app.add_subcommand("families", "good and collectionwise pws families");
  group->require_subcommand(1);

  struct Opts {
    std::string path;
    std::vector<std::string> sets;
  };
  auto o = std::make_shared<Opts>();
  auto load = [o] {
    const auto s = read_cayley_file(o->path);
    std::vector<ElementSet> sets;
    Json echo = Json::array();
    for (const auto& text : o->sets) {
      sets.push_back(element_set(s, text));
      echo.push_back(to_json(sets.back()));
    }
    return std::pair{SetFamily(s, sets), Json{{"table", o->path}, {"sets", echo}}};
  };

  for (const std::string name : {"good", "cwpws"}) {
    auto* cmd = group->add_subcommand(
        name, name == "good" ? "good-family check" : "cwpws check with kernel oracle");
    cmd->add_option("table", o->path, "Cayley table file")->required();
    cmd->add_option("--set", o->sets, "a member set, comma separated; repeat per set")
        ->required();
    cmd->callback([&action, load, name] {
      action = [load, name] {
        auto [fam, config] = load();
        if (name == "good") {
          const auto r = is_good_family(fam);
          return Outcome{config, to_json(r), r.good ? 0 : 1};
        }
        const auto r = cwpws_check(fam);
        return Outcome{config, to_json(r), r.cwpws ? 0 : 1};
      };
    });
  }
}

void add_hj(CLI::App& app, Action& action, const Globals& g) {
  auto* group = app.add_subcommand("hj", "combinatorial lines");
  group->require_subcommand(1);

  struct Opts {
    std::string path;
    std::size_t k = 2, c = 2, n_max = 3;
  };
  auto o = std::make_shared<Opts>();

  auto* line_cmd = group->add_subcommand("line", "least monochromatic line of a cube coloring");
  line_cmd->add_option("coloring", o->path, "cube coloring file")->required();
  line_cmd->callback([&action, o] {
    action = [o] {
      const auto col = read_cube_file(o->path);
      const auto w = find_mono_line(col);
      Json result{{"line", nullptr}, {"words", Json::array()}};
      if (w) {
        result["line"] = to_json(*w);
        for (const auto& word : line(*w)) {
          if (col.color(word) != col.color(line(*w).front()))
            throw VerificationFailed(0, "line is not monochromatic");
          result["words"].push_back(to_json(word));
        }
        result["color"] = col.color(line(*w).front());
      }
      return Outcome{{{"coloring", o->path}}, result, w ? 0 : 1};
    };
  });

  auto* number = group->add_subcommand("number", "least N with a line in every coloring");
  number->add_option("--k", o->k, "alphabet size")->capture_default_str();
  number->add_option("--c", o->c, "colors")->capture_default_str();
  number->add_option("--nmax", o->n_max, "largest length tried")->capture_default_str();
  number->callback([&action, o, &g] {
    action = [o, &g] {
      const auto r = hj_number_search(o->k, o->c, o->n_max, g.budget);
      return Outcome{{{"k", o->k}, {"c", o->c}, {"nmax", o->n_max}}, to_json(r),
                     r.number ? 0 : 1};
    };
  });
}

struct SearchOpts {
  std::string carrier = "additive", window, set;
  std::vector<std::string> seqs;
  std::size_t m_max = 2, t_max = 16, min_t = 0, max_size = 0;
  std::string candidates;
};

void add_search_options(CLI::App* cmd, SearchOpts& o) {
  cmd->add_option("--carrier", o.carrier, "Cayley table file, additive or multiplicative")
      ->capture_default_str();
  cmd->add_option("--window", o.window, "window set file giving A (for N carriers)");
  cmd->add_option("--set", o.set, "elements of A (for finite carriers)");
  cmd->add_option("--seq", o.seqs, "sequence file; repeat per sequence")->required();
  cmd->add_option("--m-max", o.m_max, "largest m tried")->capture_default_str();
  cmd->add_option("--t-max", o.t_max, "largest t entry tried")->capture_default_str();
  cmd->add_option("--candidates", o.candidates, "values tried for a, comma separated");
}

struct SearchInput {
  Ambient carrier;
  Membership in_a;
  std::vector<SequenceTable> family;
  JBounds bounds;
  Json config;
};

SearchInput load_search(const SearchOpts& o, std::uint64_t budget) {
  SearchInput in{parse_carrier(o.carrier), {}, {}, {}, {}};
  in.config = {{"carrier", o.carrier}, {"m_max", o.m_max}, {"t_max", o.t_max}};
  if (in.carrier.kind() == Ambient::Kind::finite) {
    if (o.set.empty() && !o.window.empty())
      throw ConventionMismatch("a finite carrier takes --set, not --window");
    const auto a = element_set(in.carrier.table(), o.set);
    in.in_a = [a](Value x) { return x >= 0 && a.contains(static_cast<Element>(x)); };
    in.config["set"] = to_json(a);
  } else {
    if (o.window.empty()) throw ConventionMismatch("an N carrier takes --window");
    const auto a = read_window_file(o.window);
    in.in_a = [a](Value x) { return a.contains(x); };
    in.config["window"] = o.window;
  }
  Json seqs = Json::array();
  for (const auto& path : o.seqs) {
    in.family.push_back(read_sequence_file(path));
    for (Value v : in.family.back().values())
      if (!in.carrier.is_element(v))
        throw ElementOutOfRange("sequence " + path + " leaves the carrier");
    seqs.push_back(path);
  }
  in.config["sequences"] = seqs;
  in.bounds.m_max = o.m_max;
  in.bounds.t_max = o.t_max;
  in.bounds.budget = budget;
  for (Element x : parse_elements(o.candidates)) in.bounds.candidates.push_back(x);
  if (!in.bounds.candidates.empty()) in.config["candidates"] = in.bounds.candidates;
  return in;
}

void add_jsets(CLI::App& app, Action& action, const Globals& g) {
  auto o = std::make_shared<SearchOpts>();

  auto* jset = app.add_subcommand("jset", "J-set witnesses");
  jset->require_subcommand(1);
  auto* witness = jset->add_subcommand("witness", "least (m, t, a) for a family");
  add_search_options(witness, *o);
  witness->add_option("--min-t", o->min_t, "t(1) must exceed this")->capture_default_str();
  witness->callback([&action, o, &g] {
    action = [o, &g] {
      auto in = load_search(*o, g.budget);
      in.config["min_t"] = o->min_t;
      const auto w = find_j_witness(in.carrier, in.in_a, in.family, in.bounds, o->min_t);
      Json result{{"witness", nullptr}, {"values", Json::array()}};
      if (w) {
        result["witness"] = to_json(*w);
        for (const auto& f : in.family) {
          const Value v = chi_eval(in.carrier, *w, f);
          if (!in.in_a(v)) throw VerificationFailed(0, "alternating product outside A");
          result["values"].push_back(v);
        }
      }
      return Outcome{in.config, result, w ? 0 : 1};
    };
  });

  auto* cset = app.add_subcommand("cset", "witnesses for every subfamily");
  cset->require_subcommand(1);
  auto* build = cset->add_subcommand("build", "run the subfamily recursion");
  add_search_options(build, *o);
  build->add_option("--max-size", o->max_size, "largest subfamily size (0: all)")
      ->capture_default_str();
  build->callback([&action, o, &g] {
    action = [o, &g] {
      auto in = load_search(*o, g.budget);
      in.config["max_size"] = o->max_size;
      const auto out = cset_recursion(in.carrier, in.in_a, in.family, in.bounds, o->max_size);
      if (auto v = verify_c_witness(in.carrier, in.in_a, in.family, out.entries))
        throw VerificationFailed(0, std::string("recorded witnesses violate condition ") +
                                        v->condition);
      return Outcome{in.config, to_json(out), out.complete ? 0 : 1};
    };
  });
}

void add_dyn(CLI::App& app, Action& action) {
  auto* group = app.add_subcommand("dyn", "shift systems and their window analogues");
  group->require_subcommand(1);

  struct Opts {
    std::string path, other, set, x, y, reading = "shifted";
    Value k = 10, len = 50, gap = 8;
  };
  auto o = std::make_shared<Opts>();

  auto* central = group->add_subcommand("central", "dynamical centrality of A");
  central->add_option("table", o->path, "Cayley table file")->required();
  central->add_option("--set", o->set, "elements of A, comma separated")->required();
  central->callback([&action, o] {
    action = [o] {
      const auto sys = ShiftSystem::build(read_cayley_file(o->path));
      const auto a = element_set(sys.semigroup(), o->set);
      const auto r = dynamically_central(sys, a);
      return Outcome{{{"table", o->path}, {"set", to_json(a)}}, to_json(r, sys),
                     r.dynamically_central() ? 0 : 1};
    };
  });

  auto* point = group->add_subcommand("point", "recurrence of x and its proximality to y");
  point->add_option("table", o->path, "Cayley table file")->required();
  point->add_option("--x", o->x, "point as binary digits, e first")->required();
  point->add_option("--y", o->y, "second point; defaults to x");
  point->callback([&action, o] {
    action = [o] {
      const auto sys = ShiftSystem::build(read_cayley_file(o->path));
      const Point x = parse_point(sys, o->x);
      const Point y = o->y.empty() ? x : parse_point(sys, o->y);
      return Outcome{{{"table", o->path}, {"x", o->x}, {"y", point_text(sys, y)}},
                     to_json(recurrence_and_proximality(sys, x, y), sys)};
    };
  });

  auto* dump = group->add_subcommand("dump", "the full action table");
  dump->add_option("table", o->path, "Cayley table file")->required();
  dump->callback([&action, o] {
    action = [o] {
      const auto sys = ShiftSystem::build(read_cayley_file(o->path));
      Outcome out{{{"table", o->path}}, {{"points", sys.points()}, {"action", sys.dump()}}};
      out.text = sys.dump();
      return out;
    };
  });

  auto* window = group->add_subcommand("window", "recurrence and proximality of A, B in omega");
  window->add_option("a", o->path, "window set file for A (omega)")->required();
  window->add_option("b", o->other, "window set file for B (omega)")->required();
  window->add_option("-k", o->k, "block length")->capture_default_str();
  window->add_option("-L,--length", o->len, "agreement interval length")->capture_default_str();
  window->add_option("-g,--gap", o->gap, "syndetic gap bound")->capture_default_str();
  window->add_option("--reading", o->reading, "block condition: shifted or sumset")
      ->check(CLI::IsMember({"shifted", "sumset"}))
      ->capture_default_str();
  window->callback([&action, o] {
    action = [o] {
      const auto a = read_window_file(o->path);
      const auto b = read_window_file(o->other);
      const auto reading =
          o->reading == "sumset" ? BlockReading::sumset : BlockReading::shifted_block;
      const auto w = window_dynamics(a, b, o->k, o->len, o->gap, reading);
      if (w.proximal.witnessed()) {
        const auto& i = w.proximal.witness->interval;
        for (Value x = i.first; x <= i.last; ++x)
          if (a.contains(x) != b.contains(x))
            throw VerificationFailed(0, "A and B differ inside the agreement interval");
      }
      return Outcome{{{"a", o->path}, {"b", o->other}, {"k", o->k}, {"length", o->len},
                      {"gap", o->gap}, {"reading", o->reading}},
                     to_json(w)};
    };
  });
}

void add_suite(CLI::App& app, Action& action, const Globals& g) {
  auto* suite = app.add_subcommand("suite", "run the twelve acceptance criteria");
  suite->callback([&action, &g] {
    action = [&g] {
      const auto results = run_acceptance({g.seed, g.jobs});
      const bool ok = std::all_of(results.begin(), results.end(),
                                  [](const CriterionResult& r) { return r.passed; });
      Outcome out{{{"seed", g.seed}, {"jobs", g.jobs}},
                  {{"criteria", to_json(results)}, {"passed", ok}},
                  ok ? 0 : 1};
      out.text = pass_fail_lines(results);
      return out;
    };
  });
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  CLI::App app{"centrallab: central sets on finite semigroups and bounded windows"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  std::optional<std::uint64_t> budget_flag;
  app.add_option("--seed", g.seed, "seed for every randomized step")->capture_default_str();
  app.add_option("--budget", budget_flag,
                 "search budget (default: $CENTRALLAB_BUDGET or 10000000)");
  app.add_option("--jobs", g.jobs, "worker threads for batch commands")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", g.format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "write the report here instead of stdout");
  app.add_flag("--timing", g.timing, "include wall-clock timing in the report");

  Action action;
  add_semigroup(app, action);
  add_window(app, action);
  add_trees(app, action);
  add_families(app, action);
  add_hj(app, action, g);
  add_jsets(app, action, g);
  add_dyn(app, action);
  add_suite(app, action, g);
  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    sub->fallthrough();
    for (auto* leaf : sub->get_subcommands([](CLI::App*) { return true; })) leaf->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command;
  for (const auto* sub = &app; !sub->get_subcommands().empty();) {
    sub = sub->get_subcommands().front();
    command += (command.empty() ? "" : " ") + sub->get_name();
  }

  try {
    g.budget = budget_flag ? *budget_flag : default_budget();
    if (g.budget == 0) throw BadBounds("--budget must be positive");

    const auto start = std::chrono::steady_clock::now();
    Outcome out = action();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    out.config["seed"] = g.seed;
    out.config["budget"] = g.budget;
    auto doc = envelope(command, out.config, out.result);
    if (g.timing) doc["timing"] = {{"seconds", elapsed.count()}};

    const auto format = g.format == "structured" ? Format::structured : Format::text;
    std::string rendered = format == Format::text && !out.text.empty() ? out.text
                                                                        : render(doc, format);
    if (format == Format::text && !out.text.empty() && g.timing) {
      rendered += "timing.seconds: " + std::to_string(elapsed.count()) + "\n";
    }
    if (g.out.empty()) {
      std::cout << rendered;
    } else {
      std::ofstream file(g.out, std::ios::binary);
      file << rendered;
      if (!file) throw Error("cannot write " + g.out);
    }
    return out.exit;
  } catch (const VerificationFailed& e) {
    std::cerr << "centrallab: internal verification failed: " << e.what() << "\n";
    return 3;
  } catch (const BudgetExceeded& e) {
    std::cerr << "centrallab: budget exceeded: " << e.what();
    if (e.progress) std::cerr << " (completed through " << *e.progress << ")";
    std::cerr << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "centrallab: " << e.what() << "\n";
    return 2;
  }
}
