#include "kg2i/text.h"

namespace kg2i::text {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

}  // namespace

std::u32string Decode(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  size_t i = 0;
  const size_t n = utf8.size();
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(utf8[i]);
    if (c < 0x80) {
      out.push_back(c);
      ++i;
      continue;
    }
    int extra;
    char32_t cp;
    if ((c & 0xE0) == 0xC0) {
      extra = 1;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      extra = 3;
      cp = c & 0x07;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + extra >= n) {
      // Truncated sequence at end of input.
      out.push_back(kReplacement);
      break;
    }
    bool ok = true;
    for (int k = 1; k <= extra; ++k) {
      unsigned char cc = static_cast<unsigned char>(utf8[i + k]);
      if ((cc & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (!ok) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

void AppendUtf8(char32_t c, std::string *out) {
  if (c < 0x80) {
    out->push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (c >> 6)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (c >> 12)));
    out->push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (c >> 18)));
    out->push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

std::string Encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) AppendUtf8(c, &out);
  return out;
}

size_t CharLength(std::string_view utf8) {
  size_t count = 0;
  for (char c : utf8) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++count;
  }
  return count;
}

std::string Slice(std::string_view utf8, size_t start, size_t end) {
  std::u32string chars = Decode(utf8);
  if (end > chars.size()) end = chars.size();
  if (start >= end) return {};
  return Encode(std::u32string_view(chars).substr(start, end - start));
}

bool IsCjk(char32_t c) {
  return (c >= 0x4E00 && c <= 0x9FFF) ||    // unified ideographs
         (c >= 0x3400 && c <= 0x4DBF) ||    // extension A
         (c >= 0x20000 && c <= 0x2EBEF) ||  // extensions B-F
         (c >= 0xF900 && c <= 0xFAFF) ||    // compatibility ideographs
         (c >= 0x3001 && c <= 0x303F) ||    // CJK punctuation (not U+3000)
         (c >= 0x3040 && c <= 0x30FF) ||    // kana
         (c >= 0xFF01 && c <= 0xFFEF);      // fullwidth forms
}

bool IsSpace(char32_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v' || c == 0xA0 || c == 0x3000 || c == 0x2009 || c == 0x200B;
}

bool IsWordChar(char32_t c) {
  if (c < 0x80) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
           (c >= 'A' && c <= 'Z');
  }
  if (IsCjk(c) || IsSpace(c)) return false;
  // Latin-1 supplement punctuation and general punctuation are not words.
  if (c >= 0x80 && c <= 0xBF) return false;
  if (c == 0xD7 || c == 0xF7) return false;
  if (c >= 0x2000 && c <= 0x2BFF) return false;
  return true;
}

std::vector<std::u32string> Tokenize(std::u32string_view text, Lang lang) {
  std::vector<std::u32string> tokens;
  std::u32string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  for (char32_t c : text) {
    if (IsSpace(c)) {
      flush();
    } else if (lang == Lang::kZh && IsCjk(c)) {
      flush();
      tokens.emplace_back(1, c);
    } else {
      current.push_back(c);
    }
  }
  flush();
  return tokens;
}

size_t CountTokens(std::string_view utf8, Lang lang) {
  std::u32string chars = Decode(utf8);
  size_t count = 0;
  bool in_run = false;
  for (char32_t c : chars) {
    if (IsSpace(c)) {
      in_run = false;
    } else if (lang == Lang::kZh && IsCjk(c)) {
      ++count;
      in_run = false;
    } else if (!in_run) {
      ++count;
      in_run = true;
    }
  }
  return count;
}

std::string FoldCase(std::string_view utf8) {
  std::string out(utf8);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string Trim(std::string_view s) {
  std::u32string chars = Decode(s);
  size_t b = 0, e = chars.size();
  while (b < e && IsSpace(chars[b])) ++b;
  while (e > b && IsSpace(chars[e - 1])) --e;
  return Encode(std::u32string_view(chars).substr(b, e - b));
}

std::string Normalize(std::string_view utf8, Lang lang) {
  std::u32string chars = Decode(utf8);
  std::string out;
  out.reserve(utf8.size());
  bool pending_space = false;
  for (char32_t c : chars) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    AppendUtf8(c, &out);
  }
  return lang == Lang::kEn ? FoldCase(out) : out;
}

bool AtWordBoundary(std::u32string_view haystack, size_t start, size_t end) {
  if (start >= end) return false;
  if (IsWordChar(haystack[start]) && start > 0 &&
      IsWordChar(haystack[start - 1])) {
    return false;
  }
  if (IsWordChar(haystack[end - 1]) && end < haystack.size() &&
      IsWordChar(haystack[end])) {
    return false;
  }
  return true;
}

std::vector<size_t> FindAll(std::u32string_view haystack,
                            std::u32string_view needle, bool word_boundary) {
  std::vector<size_t> hits;
  if (needle.empty()) return hits;
  size_t pos = 0;
  while ((pos = haystack.find(needle, pos)) != std::u32string_view::npos) {
    if (!word_boundary ||
        AtWordBoundary(haystack, pos, pos + needle.size())) {
      hits.push_back(pos);
      pos += needle.size();
    } else {
      ++pos;
    }
  }
  return hits;
}

}  // namespace kg2i::text
