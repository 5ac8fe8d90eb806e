#include "central/words.hpp"

#include <algorithm>
#include <sstream>

#include "central/error.hpp"
#include "central/text.hpp"

namespace central {

namespace {

constexpr std::uint64_t kMaxCube = std::uint64_t{1} << 24;

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

std::string letters_text(const std::vector<int>& letters) {
  std::string out = "(";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ",";
    out += letters[i] == kStar ? "*" : std::to_string(letters[i]);
  }
  return out + ")";
}

// Every combinatorial line of [1,k]^N as word indices, variable words in
// lexicographic order with the star first.
struct LineTable {
  std::vector<VariableWord> words;
  std::vector<std::vector<std::size_t>> members;
};

LineTable all_lines(std::size_t k, std::size_t n) {
  if (checked_power(k + 1, n, kMaxCube) > kMaxCube) {
    throw TooLarge("too many variable words for k=" + std::to_string(k) +
                   ", N=" + std::to_string(n));
  }
  LineTable out;
  std::vector<int> digits(n, 0);
  while (true) {
    if (std::find(digits.begin(), digits.end(), kStar) != digits.end()) {
      VariableWord w{k, digits};
      std::vector<std::size_t> idx;
      for (auto& word : line(w)) idx.push_back(word_index(word));
      out.words.push_back(std::move(w));
      out.members.push_back(std::move(idx));
    }
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digits[pos] <= static_cast<int>(k)) break;
      digits[pos] = 0;
      if (pos == 0) return out;
    }
    if (n == 0) return out;
  }
}

std::optional<std::size_t> first_mono(const LineTable& lines,
                                      const std::vector<int>& values) {
  for (std::size_t l = 0; l < lines.members.size(); ++l) {
    const auto& m = lines.members[l];
    const int c = values[m.front()];
    if (std::all_of(m.begin(), m.end(), [&](std::size_t i) { return values[i] == c; })) {
      return l;
    }
  }
  return std::nullopt;
}

// Advances an odometer over colors 1..c; false after the last coloring.
bool next_coloring(std::vector<int>& values, std::size_t colors) {
  for (std::size_t pos = values.size(); pos > 0; --pos) {
    if (++values[pos - 1] <= static_cast<int>(colors)) return true;
    values[pos - 1] = 1;
  }
  return false;
}

}  // namespace

std::vector<std::size_t> VariableWord::stars() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] == kStar) out.push_back(i + 1);
  }
  return out;
}

void check_word(const Word& w) {
  for (int a : w.letters) {
    if (a < 1 || static_cast<std::size_t>(a) > w.alphabet) {
      throw IndexOutOfRange("letter " + std::to_string(a) + " outside [1, " +
                            std::to_string(w.alphabet) + "]");
    }
  }
}

void check_variable_word(const VariableWord& w) {
  bool star = false;
  for (int a : w.letters) {
    if (a == kStar) {
      star = true;
    } else if (a < 1 || static_cast<std::size_t>(a) > w.alphabet) {
      throw IndexOutOfRange("letter " + std::to_string(a) + " outside [1, " +
                            std::to_string(w.alphabet) + "]");
    }
  }
  if (!star) throw NoStar();
}

Word substitute(const VariableWord& w, int a) {
  Word out{w.alphabet, w.letters};
  for (int& x : out.letters) {
    if (x == kStar) x = a;
  }
  return out;
}

std::vector<Word> line(const VariableWord& w) {
  check_variable_word(w);
  std::vector<Word> out;
  for (int a = 1; a <= static_cast<int>(w.alphabet); ++a) out.push_back(substitute(w, a));
  return out;
}

std::string to_string(const Word& w) { return letters_text(w.letters); }
std::string to_string(const VariableWord& w) { return letters_text(w.letters); }

std::size_t word_index(const Word& w) {
  std::size_t index = 0;
  for (int a : w.letters) index = index * w.alphabet + static_cast<std::size_t>(a - 1);
  return index;
}

Word word_at(std::size_t alphabet, std::size_t length, std::size_t index) {
  Word w{alphabet, std::vector<int>(length)};
  for (std::size_t pos = length; pos > 0; --pos) {
    w.letters[pos - 1] = static_cast<int>(index % alphabet) + 1;
    index /= alphabet;
  }
  return w;
}

void CubeColoring::validate() const {
  if (alphabet == 0 || colors == 0) {
    throw InvariantViolation("range", "alphabet and colors must be positive");
  }
  const auto cells = checked_power(alphabet, length, kMaxCube);
  if (cells > kMaxCube) throw TooLarge("cube has more than 2^24 words");
  if (values.size() != cells) {
    throw InvariantViolation("dimensions", "expected " + std::to_string(cells) +
                                               " colors, got " +
                                               std::to_string(values.size()));
  }
  for (int v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > colors) {
      throw IndexOutOfRange("color " + std::to_string(v) + " outside [1, " +
                            std::to_string(colors) + "]");
    }
  }
}

std::optional<VariableWord> find_mono_line(const CubeColoring& col) {
  col.validate();
  auto lines = all_lines(col.alphabet, col.length);
  auto hit = first_mono(lines, col.values);
  if (!hit) return std::nullopt;
  return lines.words[*hit];
}

HjResult hj_number_search(std::size_t alphabet, std::size_t colors,
                          std::size_t n_max, std::uint64_t budget) {
  if (alphabet == 0 || colors == 0) throw BadBounds("k and c must be positive");
  HjResult out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto cells = checked_power(alphabet, n, kMaxCube);
    const auto total = checked_power(colors, cells, budget);
    if (cells > kMaxCube || total > budget) {
      throw BudgetExceeded("N=" + std::to_string(n) + " needs more than " +
                               std::to_string(budget) + " colorings",
                           n - 1);
    }
    const auto lines = all_lines(alphabet, n);
    HjLevel level{n, 0, std::nullopt};
    std::vector<int> values(cells, 1);
    do {
      ++level.colorings_checked;
      if (!first_mono(lines, values)) {
        level.counterexample = CubeColoring{alphabet, n, colors, values};
        break;
      }
    } while (next_coloring(values, colors));
    const bool verified = !level.counterexample;
    out.levels.push_back(std::move(level));
    if (verified) {
      out.number = n;
      return out;
    }
  }
  return out;
}

std::uint64_t count_line_free_colorings(std::size_t alphabet, std::size_t length,
                                        std::size_t colors, std::uint64_t budget) {
  const auto cells = checked_power(alphabet, length, kMaxCube);
  if (cells > kMaxCube || checked_power(colors, cells, budget) > budget) {
    throw BudgetExceeded("cube colorings exceed the budget");
  }
  const auto lines = all_lines(alphabet, length);
  std::vector<int> values(cells, 1);
  std::uint64_t free = 0;
  do {
    if (!first_mono(lines, values)) ++free;
  } while (next_coloring(values, colors));
  return free;
}

std::string to_cube_text(const CubeColoring& col) {
  std::ostringstream out;
  out << col.alphabet << ' ' << col.length << ' ' << col.colors << '\n';
  for (std::size_t i = 0; i < col.values.size(); ++i) {
    if (i) out << ' ';
    out << col.values[i];
  }
  out << '\n';
  return out.str();
}

CubeColoring parse_cube(std::string_view source) {
  auto lines = text::split_lines(source);
  std::vector<std::pair<text::Token, std::size_t>> tokens;
  for (const auto& l : lines) {
    for (const auto& t : text::split_tokens(l.text)) tokens.emplace_back(t, l.number);
  }
  if (tokens.size() < 3) throw ParseError(1, 1, "expected header 'k N c'");
  auto num = [&](std::size_t i) { return text::to_integer(tokens[i].first, tokens[i].second); };
  const auto k = num(0), n = num(1), c = num(2);
  if (k < 1 || n < 0 || c < 1) throw ParseError(tokens[0].second, 1, "invalid header");
  CubeColoring col{static_cast<std::size_t>(k), static_cast<std::size_t>(n),
                   static_cast<std::size_t>(c), {}};
  for (std::size_t i = 3; i < tokens.size(); ++i) col.values.push_back(static_cast<int>(num(i)));
  col.validate();
  return col;
}

CubeColoring read_cube_file(const std::filesystem::path& path) {
  return parse_cube(text::read_file(path));
}

}  // namespace central
