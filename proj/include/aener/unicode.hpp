#pragma once

#include <string>
#include <string_view>

namespace aener::unicode {

// Throws DataError on invalid UTF-8.
std::u32string decode(std::string_view utf8);
std::string encode(std::u32string_view text);
std::string encode(char32_t c);

// Length in scalar values.
std::size_t length(std::string_view utf8);

// UTF-8 slice of [start, end) in scalar-value offsets.
std::string slice(std::u32string_view text, std::size_t start, std::size_t end);

// Unicode White_Space property.
bool is_space(char32_t c);
bool is_digit(char32_t c);
// Letters: ASCII letters plus any non-ASCII code point outside the common
// punctuation, symbol and emoji blocks.
bool is_letter(char32_t c);

// Simple one-to-one case folding (Latin, Greek, Cyrillic). Length preserving
// so offsets computed on folded text apply to the original.
char32_t fold(char32_t c);
std::u32string fold(std::u32string_view text);

std::u32string_view trim(std::u32string_view text);
std::string_view trim(std::string_view text);

}  // namespace aener::unicode
