#include "central/semigroup.hpp"

#include <algorithm>
#include <sstream>

#include "central/error.hpp"
#include "central/text.hpp"

namespace central {

ElementSet::ElementSet(std::size_t order, std::initializer_list<Element> members)
    : ElementSet(order, std::span<const Element>(members.begin(), members.size())) {}

ElementSet::ElementSet(std::size_t order, std::span<const Element> members)
    : bits_(order, false) {
  for (Element x : members) insert(x);
}

ElementSet ElementSet::full(std::size_t order) {
  ElementSet s(order);
  s.bits_.assign(order, true);
  return s;
}

ElementSet ElementSet::from_mask(std::size_t order, std::uint64_t mask) {
  if (order > 64) throw BadBounds("from_mask requires order <= 64");
  ElementSet s(order);
  for (std::size_t i = 0; i < order; ++i) s.bits_[i] = (mask >> i) & 1u;
  return s;
}

void ElementSet::insert(Element x) {
  if (x >= bits_.size()) {
    throw ElementOutOfRange("element " + std::to_string(x) +
                            " outside a set of order " +
                            std::to_string(bits_.size()));
  }
  bits_[x] = true;
}

void ElementSet::erase(Element x) {
  if (x < bits_.size()) bits_[x] = false;
}

std::size_t ElementSet::size() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(static_cast<Element>(i));
  }
  return out;
}

std::uint64_t ElementSet::mask() const {
  if (bits_.size() > 64) throw BadBounds("mask requires order <= 64");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) m |= std::uint64_t{1} << i;
  }
  return m;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.contains(static_cast<Element>(i))) return false;
  }
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && other.contains(static_cast<Element>(i))) return true;
  }
  return false;
}

ElementSet ElementSet::intersection(const ElementSet& other) const {
  ElementSet out(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    out.bits_[i] = bits_[i] && other.contains(static_cast<Element>(i));
  }
  return out;
}

ElementSet ElementSet::union_with(const ElementSet& other) const {
  ElementSet out(*this);
  for (Element x : other.members()) out.insert(x);
  return out;
}

ElementSet ElementSet::complement() const {
  ElementSet out(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = !bits_[i];
  return out;
}

bool lex_less(const ElementSet& a, const ElementSet& b) {
  auto ma = a.members();
  auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(),
                                      mb.end());
}

bool witness_less(const ElementSet& a, const ElementSet& b) {
  auto sa = a.size();
  auto sb = b.size();
  if (sa != sb) return sa < sb;
  return lex_less(a, b);
}

FiniteSemigroup FiniteSemigroup::load(
    std::size_t order, const std::vector<std::vector<Element>>& table,
    std::vector<std::string> labels) {
  if (order == 0) throw InvariantViolation("order", "order must be positive");
  if (table.size() != order) {
    throw InvariantViolation("dimensions",
                             "expected " + std::to_string(order) + " rows, got " +
                                 std::to_string(table.size()));
  }
  std::vector<Element> flat;
  flat.reserve(order * order);
  for (std::size_t i = 0; i < order; ++i) {
    if (table[i].size() != order) {
      throw InvariantViolation("dimensions",
                               "row " + std::to_string(i) + " has " +
                                   std::to_string(table[i].size()) +
                                   " entries, expected " + std::to_string(order));
    }
    for (std::size_t j = 0; j < order; ++j) {
      if (table[i][j] >= order) {
        throw IndexOutOfRange("entry (" + std::to_string(i) + ", " +
                              std::to_string(j) + ") = " +
                              std::to_string(table[i][j]) + " is not below " +
                              std::to_string(order));
      }
      flat.push_back(table[i][j]);
    }
  }
  if (!labels.empty() && labels.size() != order) {
    throw InvariantViolation("labels", "expected " + std::to_string(order) +
                                           " labels, got " +
                                           std::to_string(labels.size()));
  }
  for (const auto& label : labels) {
    if (label.empty() || label.find_first_of(" \t\n") != std::string::npos) {
      throw InvariantViolation("labels", "labels must be nonempty words");
    }
  }
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      const std::size_t ij = flat[i * order + j];
      for (std::size_t k = 0; k < order; ++k) {
        const std::size_t jk = flat[j * order + k];
        if (flat[ij * order + k] != flat[i * order + jk]) {
          throw NonAssociative(i, j, k);
        }
      }
    }
  }
  return FiniteSemigroup(order, std::move(flat), std::move(labels));
}

void FiniteSemigroup::check_element(Element x) const {
  if (x >= order_) {
    throw ElementOutOfRange("element " + std::to_string(x) +
                            " not in a semigroup of order " +
                            std::to_string(order_));
  }
}

void FiniteSemigroup::check_set(const ElementSet& a) const {
  if (a.order() != order_) {
    throw ElementOutOfRange("set of order " + std::to_string(a.order()) +
                            " used with a semigroup of order " +
                            std::to_string(order_));
  }
}

std::string to_cayley_text(const FiniteSemigroup& s) {
  std::ostringstream out;
  const auto n = s.order();
  out << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << s.product(static_cast<Element>(i), static_cast<Element>(j));
    }
    out << '\n';
  }
  if (!s.labels().empty()) {
    out << "# labels:";
    for (const auto& label : s.labels()) out << ' ' << label;
    out << '\n';
  }
  return out.str();
}

FiniteSemigroup parse_cayley(std::string_view source) {
  auto lines = text::split_lines(source);
  std::size_t cursor = 0;
  auto skip_blank = [&] {
    while (cursor < lines.size() && text::split_tokens(lines[cursor].text).empty())
      ++cursor;
  };
  skip_blank();
  if (cursor >= lines.size()) throw ParseError(1, 1, "missing order line");
  auto header = text::split_tokens(lines[cursor].text);
  if (header.size() != 1) {
    throw ParseError(lines[cursor].number, header.size() > 1 ? header[1].column : 1,
                     "order line must hold a single integer");
  }
  const auto order = text::to_integer(header[0], lines[cursor].number);
  if (order <= 0) {
    throw ParseError(lines[cursor].number, header[0].column,
                     "order must be positive");
  }
  ++cursor;
  const auto n = static_cast<std::size_t>(order);
  std::vector<std::vector<Element>> table;
  for (std::size_t row = 0; row < n; ++row) {
    skip_blank();
    if (cursor >= lines.size()) {
      throw ParseError(lines.empty() ? 1 : lines.back().number + 1, 1,
                       "expected " + std::to_string(n) + " table rows");
    }
    const auto& line = lines[cursor];
    auto tokens = text::split_tokens(line.text);
    if (tokens.size() != n) {
      throw ParseError(line.number, 1,
                       "row has " + std::to_string(tokens.size()) +
                           " entries, expected " + std::to_string(n));
    }
    std::vector<Element> values;
    for (const auto& token : tokens) {
      auto v = text::to_integer(token, line.number);
      if (v < 0 || v >= order) {
        throw IndexOutOfRange("line " + std::to_string(line.number) +
                              ", column " + std::to_string(token.column) +
                              ": entry " + std::to_string(v) +
                              " is not an element index");
      }
      values.push_back(static_cast<Element>(v));
    }
    table.push_back(std::move(values));
    ++cursor;
  }
  std::vector<std::string> labels;
  for (; cursor < lines.size(); ++cursor) {
    auto tokens = text::split_tokens(lines[cursor].text);
    if (tokens.empty()) continue;
    constexpr std::string_view prefix = "# labels:";
    auto body = lines[cursor].text;
    auto start = body.find_first_not_of(" \t");
    body.remove_prefix(start);
    if (body.substr(0, prefix.size()) != prefix || !labels.empty()) {
      throw ParseError(lines[cursor].number, tokens[0].column,
                       "unexpected trailing content");
    }
    for (const auto& token : text::split_tokens(body.substr(prefix.size()))) {
      labels.emplace_back(token.text);
    }
  }
  return FiniteSemigroup::load(n, table, std::move(labels));
}

FiniteSemigroup read_cayley_file(const std::filesystem::path& path) {
  return parse_cayley(text::read_file(path));
}

}  // namespace central
