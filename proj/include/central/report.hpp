#pragma once

// Structured reports. Keys are sorted (nlohmann::json's default object
// type), so dumps are byte-stable for equal content.

#include <string>
#include <string_view>

#include "json.hpp"

#include "central/dynamics.hpp"
#include "central/families.hpp"
#include "central/ideals.hpp"
#include "central/jsets.hpp"
#include "central/largeness.hpp"
#include "central/trees.hpp"
#include "central/window.hpp"
#include "central/words.hpp"

namespace central {

inline constexpr std::string_view kVersion = "0.1.0";

using Json = nlohmann::json;

Json to_json(const ElementSet& a);
Json to_json(const IdealStructure& ideals);
Json to_json(const LargenessProfile& p);
Json to_json(const ShiftSpectrum& s);

Json to_json(const WindowSet& a);
Json to_json(const Interval& i);
Json to_json(const FsWitness& w);
Json to_json(const ThickWitness& w);
Json to_json(const SyndeticWitness& w);
Json to_json(const PwsWindowWitness& w);
Json to_json(const BergelsonWitness& w);
Json to_json(const WindowLargeness& w);
Json to_json(const ClassScan& scan);

template <class W>
Json to_json(const Verdict<W>& v) {
  Json out{{"status", std::string(to_string(v.status))}, {"note", v.note}};
  out["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  return out;
}

Json to_json(const Node& f);
Json to_json(const BranchProducts& b);
Json to_json(const TreeClassification& c);

Json to_json(const GoodFamilyReport& r);
Json to_json(const CwpwsReport& r);

Json to_json(const Word& w);
Json to_json(const VariableWord& w);
Json to_json(const HjResult& r);
Json to_json(const ChiArguments& x);
Json to_json(const LineReduction& r);
Json to_json(const CsetOutcome& o);
Json to_json(const CsetViolation& v);

Json to_json(const RecurrenceReport& r);
Json to_json(const DynReport& r, const ShiftSystem& sys);
Json to_json(const DynCentralReport& r, const ShiftSystem& sys);
Json to_json(const WindowDynamics& w);

/// {command, config, result, version}.
Json envelope(std::string_view command, Json config, Json result);

enum class Format { text, structured };

/// structured: two-space indented JSON. text: one "path: value" line per
/// leaf, arrays of scalars inline.
std::string render(const Json& doc, Format format);

}  // namespace central
