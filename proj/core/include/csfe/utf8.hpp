#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace csfe::utf8 {

struct CodePoint {
  char32_t value;
  std::size_t offset;  // byte offset of the first code unit
  std::size_t length;  // code units
};

/// Decodes `text`. Throws csfe::Error(UnsupportedCharacter) on ill-formed
/// UTF-8, with the offset of the offending byte.
std::vector<CodePoint> decode(std::string_view text);

void append(std::string& out, char32_t cp);

std::size_t count(std::string_view text);

std::string format_codepoint(char32_t cp);  // "U+4E00"

}  // namespace csfe::utf8
