#pragma once

// Small tokenizer shared by the file-format parsers.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace central::text {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::string_view text;
  std::size_t number;  // 1-based
};

std::vector<Line> split_lines(std::string_view text);
std::vector<Token> split_tokens(std::string_view line);

/// Parses a signed decimal integer; throws ParseError at (line, column).
std::int64_t to_integer(const Token& token, std::size_t line);

std::string read_file(const std::filesystem::path& path);

}  // namespace central::text
