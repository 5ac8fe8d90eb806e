#pragma once

// Words over [1, k], variable words, combinatorial lines and a brute-force
// search for Hales-Jewett numbers at toy sizes.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace central {

/// Letters are 1..k; in a VariableWord the letter 0 is the star, which
/// sorts before every ordinary letter.
constexpr int kStar = 0;

struct Word {
  std::size_t alphabet = 0;
  std::vector<int> letters;
  friend bool operator==(const Word&, const Word&) = default;
};

struct VariableWord {
  std::size_t alphabet = 0;
  std::vector<int> letters;
  friend bool operator==(const VariableWord&, const VariableWord&) = default;
  /// 1-based star positions v₁ < … < v_r.
  std::vector<std::size_t> stars() const;
};

/// Throws InvariantViolation("range") for letters outside [1, k].
void check_word(const Word& w);
/// As check_word, also allowing stars; throws NoStar when none occurs.
void check_variable_word(const VariableWord& w);

/// w(a): every star replaced by a.
Word substitute(const VariableWord& w, int a);
/// [w(1), ..., w(k)].
std::vector<Word> line(const VariableWord& w);

std::string to_string(const Word& w);
std::string to_string(const VariableWord& w);

/// Index of w among the kᴺ words in lexicographic order.
std::size_t word_index(const Word& w);
Word word_at(std::size_t alphabet, std::size_t length, std::size_t index);

/// A coloring of [1, k]^N by colors 1..c, stored in lexicographic word order.
struct CubeColoring {
  std::size_t alphabet = 0;
  std::size_t length = 0;
  std::size_t colors = 0;
  std::vector<int> values;

  /// Throws InvariantViolation("dimensions"/"range") and TooLarge.
  void validate() const;
  int color(const Word& w) const { return values.at(word_index(w)); }
};

/// Least variable word (star first) whose line is monochromatic.
std::optional<VariableWord> find_mono_line(const CubeColoring& col);

struct HjLevel {
  std::size_t length = 0;
  std::uint64_t colorings_checked = 0;
  std::optional<CubeColoring> counterexample;  // first line-free coloring
};

struct HjResult {
  std::optional<std::size_t> number;  // least N found, if any
  std::vector<HjLevel> levels;
};

/// For N = 1..n_max, enumerates all c^(kᴺ) colorings. Throws
/// BudgetExceeded (progress = last refuted N) when a level needs more than
/// `budget` colorings. An empty `number` means no N ≤ n_max was verified.
HjResult hj_number_search(std::size_t alphabet, std::size_t colors,
                          std::size_t n_max, std::uint64_t budget);

/// Counts line-free colorings of [1,k]^N over the whole cube (used to
/// confirm the HJ property at lengths beyond the least one).
std::uint64_t count_line_free_colorings(std::size_t alphabet, std::size_t length,
                                        std::size_t colors, std::uint64_t budget);

// Cube coloring file: "k N c" then kᴺ values in lexicographic word order.
std::string to_cube_text(const CubeColoring& col);
CubeColoring parse_cube(std::string_view text);
CubeColoring read_cube_file(const std::filesystem::path& path);

}  // namespace central
