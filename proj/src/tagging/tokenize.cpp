#include "aener/tagging.hpp"
#include "aener/unicode.hpp"

namespace aener {

namespace {

bool is_word_char(char32_t c) {
  return unicode::is_letter(c) || unicode::is_digit(c) || c == U'&';
}

}  // namespace

std::vector<Token> tokenize(std::u32string_view text) {
  std::vector<Token> out;
  auto emit = [&](std::size_t b, std::size_t e) {
    out.push_back(Token{static_cast<std::int64_t>(b), static_cast<std::int64_t>(e),
                        unicode::slice(text, b, e)});
  };

  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (unicode::is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t b = i;
    std::size_t e = i;
    while (e < n && !unicode::is_space(text[e])) ++e;
    i = e;

    // Peel leading and trailing punctuation into single-character tokens.
    std::size_t core_b = b;
    while (core_b < e && !is_word_char(text[core_b])) ++core_b;
    std::size_t core_e = e;
    while (core_e > core_b && !is_word_char(text[core_e - 1])) --core_e;

    for (std::size_t k = b; k < core_b; ++k) emit(k, k + 1);
    if (core_b < core_e) emit(core_b, core_e);
    for (std::size_t k = core_e; k < e; ++k) emit(k, k + 1);
  }
  return out;
}

std::vector<Token> tokenize(std::string_view text) {
  return tokenize(unicode::decode(text));
}

}  // namespace aener
