#include "central/report.hpp"

#include <sstream>

#include "central/combinatorics.hpp"

namespace central {

namespace {

Json optional_element(const std::optional<Element>& e) {
  return e ? Json(*e) : Json(nullptr);
}

Json subfamily_json(std::uint64_t mask) {
  Json out = Json::array();
  for (auto i : mask_members(mask)) out.push_back(i);
  return out;
}

Json coordinate_json(Coordinate q) { return coordinate_text(q); }

Json dyn_witness(const std::optional<DynCentralWitness>& w, const ShiftSystem& sys) {
  if (!w) return nullptr;
  return Json{{"x", point_text(sys, w->x)},
              {"y", point_text(sys, w->y)},
              {"neighborhood", {{"coordinate", coordinate_json(w->q)}, {"value", w->b ? 1 : 0}}},
              {"proximal_at", w->proximal_at}};
}

bool is_scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (e.is_structured()) return false;
  }
  return true;
}

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    if (j.empty()) out << path << ": {}\n";
    for (const auto& [key, value] : j.items()) {
      flatten(value, path.empty() ? key : path + "." + key, out);
    }
  } else if (j.is_array() && !is_scalar_array(j)) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    }
  } else if (j.is_string()) {
    out << path << ": " << j.get<std::string>() << '\n';
  } else {
    out << path << ": " << j.dump() << '\n';
  }
}

}  // namespace

Json to_json(const ElementSet& a) { return a.members(); }

Json to_json(const IdealStructure& ideals) {
  Json left = Json::array(), right = Json::array();
  for (const auto& l : ideals.minimal_left_ideals) left.push_back(to_json(l));
  for (const auto& r : ideals.minimal_right_ideals) right.push_back(to_json(r));
  return Json{{"minimal_left_ideals", left},
              {"minimal_right_ideals", right},
              {"kernel", to_json(ideals.kernel)},
              {"idempotents", to_json(ideals.idempotents)},
              {"minimal_idempotents", to_json(ideals.minimal_idempotents)}};
}

Json to_json(const LargenessProfile& p) {
  Json out;
  out["thick"] = {{"holds", p.is_thick()}, {"witness", optional_element(p.thick)}};
  out["syndetic"] = {{"holds", p.is_syndetic()},
                     {"witness", p.syndetic ? to_json(*p.syndetic) : Json(nullptr)}};
  out["piecewise_syndetic"] = {{"holds", p.is_piecewise_syndetic()}, {"witness", nullptr}};
  if (p.piecewise_syndetic) {
    out["piecewise_syndetic"]["witness"] = {
        {"shifts", to_json(p.piecewise_syndetic->shifts)},
        {"anchor", p.piecewise_syndetic->anchor}};
  }
  out["central"] = {{"holds", p.is_central()}, {"witness", optional_element(p.central)}};
  return out;
}

Json to_json(const ShiftSpectrum& s) {
  return Json{{"spectrum", to_json(s.spectrum)},
              {"piecewise_syndetic", s.piecewise_syndetic},
              {"spectrum_syndetic", s.spectrum_syndetic},
              {"spectrum_nonempty", s.spectrum_nonempty},
              {"agree", s.agree()}};
}

Json to_json(const WindowSet& a) {
  return Json{{"horizon", a.horizon()},
              {"origin", a.origin() == Origin::omega ? "omega" : "natural"},
              {"size", a.size()}};
}

Json to_json(const Interval& i) { return Json{{"first", i.first}, {"last", i.last}}; }

Json to_json(const FsWitness& w) {
  return Json{{"basis", w.basis}, {"closure", w.closure}};
}

Json to_json(const ThickWitness& w) { return Json{{"interval", to_json(w.interval)}}; }

Json to_json(const SyndeticWitness& w) {
  return Json{{"gap_bound", w.gap_bound}, {"largest_gap", w.largest_gap}};
}

Json to_json(const PwsWindowWitness& w) {
  return Json{{"shifts", w.shifts}, {"interval", to_json(w.interval)}};
}

Json to_json(const BergelsonWitness& w) {
  return Json{{"color", w.color}, {"a", w.a}, {"b", w.b}, {"c", w.c}, {"d", w.d}};
}

Json to_json(const WindowLargeness& w) {
  return Json{{"thick", to_json(w.thick)},
              {"syndetic", to_json(w.syndetic)},
              {"piecewise_syndetic", to_json(w.piecewise_syndetic)}};
}

Json to_json(const ClassScan& scan) {
  Json add = Json::array(), mul = Json::array();
  for (std::size_t i = 0; i < scan.additive_fs.size(); ++i) {
    add.push_back({{"k", i + 2}, {"verdict", to_json(scan.additive_fs[i])}});
    mul.push_back({{"k", i + 2}, {"verdict", to_json(scan.multiplicative_fs[i])}});
  }
  return Json{{"color", scan.color},
              {"members", to_json(scan.members)},
              {"largeness", to_json(scan.largeness)},
              {"additive_fs", add},
              {"multiplicative_fs", mul},
              {"additive_pws_and_multiplicative_fs", scan.additive_pws_and_multiplicative_fs}};
}

Json to_json(const Node& f) { return Json(std::vector<Value>(f)); }

Json to_json(const BranchProducts& b) {
  Json out{{"branch", b.branch}, {"products", b.products}};
  out["tail_products"] = b.tail_products ? Json(*b.tail_products) : Json(nullptr);
  return out;
}

Json to_json(const TreeClassification& c) {
  Json out{{"is_star_tree", c.is_star_tree},
           {"is_fp_tree", c.is_fp_tree},
           {"pruned_to_depth", c.pruned_to_depth},
           {"star_failure", nullptr},
           {"fp_failure", nullptr}};
  if (c.star_failure) {
    const auto& s = *c.star_failure;
    out["star_failure"] = {{"node", to_json(s.f)}, {"x", s.x}, {"y", s.y}, {"product", s.product}};
  }
  if (c.fp_failure) {
    const auto& f = *c.fp_failure;
    out["fp_failure"] = {{"node", to_json(f.f)},
                         {"element", f.element},
                         {"side", f.in_branch ? "branch_only" : "products_only"}};
  }
  return out;
}

Json to_json(const GoodFamilyReport& r) {
  Json out{{"good", r.good}, {"violation", nullptr}, {"empty_subfamily", nullptr}};
  Json choices = Json::array();
  for (std::size_t i = 0; i < r.choices.size(); ++i) {
    for (const auto& [x, j] : r.choices[i]) choices.push_back({{"i", i}, {"x", x}, {"j", j}});
  }
  out["choices"] = choices;
  if (r.violation) out["violation"] = {{"i", r.violation->first}, {"x", r.violation->second}};
  if (r.empty_subfamily) out["empty_subfamily"] = subfamily_json(*r.empty_subfamily);
  return out;
}

Json to_json(const CwpwsReport& r) {
  Json out{{"cwpws", r.cwpws},
           {"oracle", r.oracle},
           {"agree", r.agree},
           {"refutation", r.refutation},
           {"empty_subfamily", nullptr},
           {"witness", nullptr}};
  if (r.empty_subfamily) out["empty_subfamily"] = subfamily_json(*r.empty_subfamily);
  if (r.witness) {
    Json g = Json::array();
    for (const auto& [mask, shifts] : r.witness->shifts) {
      g.push_back({{"subfamily", subfamily_json(mask)}, {"shifts", to_json(shifts)}});
    }
    out["witness"] = {{"alpha", r.witness->alpha}, {"chi", "constant alpha"}, {"shifts", g}};
  }
  return out;
}

Json to_json(const Word& w) { return to_string(w); }
Json to_json(const VariableWord& w) { return to_string(w); }

Json to_json(const HjResult& r) {
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    Json level{{"length", l.length},
               {"colorings_checked", l.colorings_checked},
               {"counterexample", nullptr}};
    if (l.counterexample) level["counterexample"] = l.counterexample->values;
    levels.push_back(level);
  }
  Json out{{"levels", levels}};
  out["number"] = r.number ? Json(*r.number) : Json(nullptr);
  out["status"] = r.number ? "WITNESSED" : "UNKNOWN";
  return out;
}

Json to_json(const ChiArguments& x) {
  return Json{{"m", x.m}, {"a", x.a}, {"t", x.t}};
}

Json to_json(const LineReduction& r) {
  Json transcript = Json::array();
  for (const auto& c : r.transcript) {
    transcript.push_back({{"letter", c.letter}, {"reduced", c.reduced}, {"original", c.original}});
  }
  return Json{{"witness", to_json(r.witness)}, {"transcript", transcript}, {"verified", true}};
}

Json to_json(const CsetOutcome& o) {
  Json entries = Json::array();
  for (const auto& e : o.entries) {
    entries.push_back({{"subfamily", subfamily_json(e.subfamily)}, {"witness", to_json(e.witness)}});
  }
  Json out{{"complete", o.complete}, {"entries", entries}, {"diagnostics", o.diagnostics}};
  out["failed_at"] = o.failed_at ? subfamily_json(*o.failed_at) : Json(nullptr);
  return out;
}

Json to_json(const CsetViolation& v) {
  Json chain = Json::array();
  for (auto m : v.chain) chain.push_back(subfamily_json(m));
  return Json{{"condition", std::string(1, v.condition)},
              {"chain", chain},
              {"selection", v.selection},
              {"product", v.product}};
}

Json to_json(const RecurrenceReport& r) {
  Json per = Json::array();
  for (const auto& w : r.per_left_ideal) per.push_back(optional_element(w));
  Json out{{"uniformly_recurrent", r.uniformly_recurrent()},
           {"per_left_ideal", per},
           {"kernel_fixer", optional_element(r.kernel_fixer)},
           {"idempotent_fixer", optional_element(r.idempotent_fixer)},
           {"agree", r.agree()}};
  out["syndetic_returns"] = r.syndetic_returns ? to_json(*r.syndetic_returns) : Json(nullptr);
  return out;
}

Json to_json(const DynReport& r, const ShiftSystem& sys) {
  Json prox = Json::array();
  for (auto z : r.proximal_to) prox.push_back(point_text(sys, z));
  return Json{{"x", point_text(sys, r.x)},
              {"y", point_text(sys, r.y)},
              {"recurrence", to_json(r.recurrence)},
              {"proximal", r.proximal.has_value()},
              {"proximal_at", optional_element(r.proximal)},
              {"proximal_to", prox}};
}

Json to_json(const DynCentralReport& r, const ShiftSystem& sys) {
  return Json{{"dynamically_central", r.dynamically_central()},
              {"canonical", dyn_witness(r.canonical, sys)},
              {"general", dyn_witness(r.general, sys)},
              {"algebraic", r.algebraic},
              {"agree", r.agree()},
              {"x_at_identity", 1}};
}

Json to_json(const WindowDynamics& w) {
  return Json{{"recurrent_a", to_json(w.recurrent_a)},
              {"recurrent_b", to_json(w.recurrent_b)},
              {"proximal", to_json(w.proximal)},
              {"dyn_central", to_json(w.dyn_central)}};
}

Json envelope(std::string_view command, Json config, Json result) {
  return Json{{"command", std::string(command)},
              {"config", std::move(config)},
              {"result", std::move(result)},
              {"version", std::string(kVersion)}};
}

std::string render(const Json& doc, Format format) {
  if (format == Format::structured) return doc.dump(2) + "\n";
  std::ostringstream out;
  flatten(doc, "", out);
  return out.str();
}

}  // namespace central
