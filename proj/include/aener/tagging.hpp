#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "aener/types.hpp"

namespace aener {

struct Token {
  std::int64_t start = 0;  // scalar-value offsets into the parent text
  std::int64_t end = 0;
  std::string surface;
};

// Splits on Unicode whitespace, then peels leading and trailing characters
// that are neither letters, digits nor '&' into single-character tokens.
std::vector<Token> tokenize(std::string_view text);
std::vector<Token> tokenize(std::u32string_view text);

// Tag encoding: O, or B-/I- for each entity type.
struct Tag {
  enum class Kind : std::uint8_t { outside, begin, inside };
  Kind kind = Kind::outside;
  EntityType type = EntityType::ae;

  static Tag outside() { return {}; }
  static Tag begin(EntityType t) { return {Kind::begin, t}; }
  static Tag inside(EntityType t) { return {Kind::inside, t}; }

  friend bool operator==(const Tag& a, const Tag& b) {
    return a.kind == b.kind && (a.kind == Kind::outside || a.type == b.type);
  }
};

std::string to_string(const Tag& tag);
Tag parse_tag(std::string_view label);  // throws DataError

using TagSequence = std::vector<Tag>;

struct EncodeResult {
  TagSequence tags;
  std::size_t clipped = 0;    // spans widened to whole tokens
  std::size_t conflicts = 0;  // tokens claimed by more than one type
};

// Cross-type claims on the same token resolve ae > vaccine > shot.
EncodeResult encode_iob(const AnnotatedDocument& doc,
                        const std::vector<Token>& tokens);

// Lenient: an I-t with no open t-run starts a new run. Surfaces are taken
// from `text`. Precondition tags.size() == tokens.size() (DataError).
SpanSet decode_iob(std::string_view text, const std::vector<Token>& tokens,
                   const TagSequence& tags);

// "surface<TAB>tag" per token, blank line after each document.
void write_conll(const Corpus& corpus, std::ostream& out);

}  // namespace aener
