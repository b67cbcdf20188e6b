#ifndef KG2I_TEXT_H_
#define KG2I_TEXT_H_

// UTF-8 helpers, the paragraph tokenizer, and surface normalization. All
// offsets exposed by the library are codepoint ("character") offsets.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "kg2i/types.h"

namespace kg2i::text {

// Invalid sequences decode to U+FFFD.
std::u32string Decode(std::string_view utf8);
std::string Encode(std::u32string_view text);
void AppendUtf8(char32_t c, std::string *out);

size_t CharLength(std::string_view utf8);

// Substring by codepoint offsets [start, end). Clamped to the text length.
std::string Slice(std::string_view utf8, size_t start, size_t end);

// Han ideographs, CJK punctuation, kana and fullwidth forms.
bool IsCjk(char32_t c);
bool IsSpace(char32_t c);

// Letters and digits outside the CJK ranges. Used for word-boundary checks.
bool IsWordChar(char32_t c);

// zh: each CJK codepoint is one token, and each maximal run of non-CJK
// non-space codepoints is one token. en: whitespace-delimited runs.
std::vector<std::u32string> Tokenize(std::u32string_view text, Lang lang);
size_t CountTokens(std::string_view utf8, Lang lang);

// ASCII case folding. Other scripts pass through.
std::string FoldCase(std::string_view utf8);

// Trim, collapse internal whitespace to one space, and case-fold for en.
std::string Normalize(std::string_view utf8, Lang lang);

// Start offsets of every occurrence of needle in haystack, scanning left to
// right without overlap. With word_boundary set, an occurrence whose first
// (last) codepoint is a word character must not be preceded (followed) by
// another word character.
std::vector<size_t> FindAll(std::u32string_view haystack,
                            std::u32string_view needle, bool word_boundary);

bool AtWordBoundary(std::u32string_view haystack, size_t start, size_t end);

std::string Trim(std::string_view s);

}  // namespace kg2i::text

#endif  // KG2I_TEXT_H_
