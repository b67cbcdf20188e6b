#include "kg2i/corpus.h"

#include <algorithm>
#include <array>
#include <cctype>

#include "kg2i/backend.h"
#include "kg2i/errors.h"
#include "kg2i/text.h"

namespace kg2i {

ordered_json ToJson(const Paragraph &p) {
  ordered_json j;
  j["id"] = p.id;
  j["lang"] = LangCode(p.lang);
  j["text"] = p.text;
  j["token_count"] = p.token_count;
  if (p.domain) {
    j["domain"] = DomainName(*p.domain);
  } else {
    j["domain"] = nullptr;
  }
  j["anchors"] = ordered_json::array();
  for (const Anchor &a : p.anchors) {
    j["anchors"].push_back(
        ordered_json{{"start", a.start}, {"end", a.end}, {"target", a.target_title}});
  }
  return j;
}

Paragraph ParagraphFromJson(const json &j) {
  const std::string ctx = "paragraph";
  Paragraph p;
  p.id = RequireString(j, "id", ctx);
  p.lang = ParseLang(RequireString(j, "lang", ctx));
  p.text = RequireString(j, "text", ctx);
  p.token_count = j.contains("token_count") ? j["token_count"].get<size_t>()
                                            : text::CountTokens(p.text, p.lang);
  if (j.contains("domain") && !j["domain"].is_null()) {
    p.domain = ParseDomain(j["domain"].get<std::string>());
    if (!p.domain) throw ConfigError("paragraph " + p.id + ": unknown domain");
  }
  if (j.contains("anchors")) {
    for (const json &a : j["anchors"]) {
      p.anchors.push_back({a.at("start").get<size_t>(), a.at("end").get<size_t>(),
                           a.at("target").get<std::string>()});
    }
  }
  return p;
}

std::vector<CorpusDocument> ReadCorpus(std::istream &in) {
  std::vector<CorpusDocument> docs;
  JsonlReader reader(in);
  json record;
  while (reader.Next(&record)) {
    const size_t offset = reader.line_offset();
    if (!record.is_object()) throw ParseError("corpus record is not an object", offset);
    for (const char *field : {"id", "lang", "wikitext"}) {
      if (!record.contains(field) || !record[field].is_string()) {
        throw ParseError(std::string("corpus record lacks string field '") +
                             field + "'",
                         offset);
      }
    }
    CorpusDocument doc;
    doc.id = record["id"].get<std::string>();
    const std::string lang = record["lang"].get<std::string>();
    if (lang != "zh" && lang != "en") {
      throw ParseError("corpus record " + doc.id + " has unsupported lang '" +
                           lang + "'",
                       offset);
    }
    doc.lang = ParseLang(lang);
    if (record.contains("title") && record["title"].is_string()) {
      doc.title = record["title"].get<std::string>();
    }
    doc.wikitext = record["wikitext"].get<std::string>();
    doc.byte_offset = offset;
    docs.push_back(std::move(doc));
  }
  return docs;
}

SkipReport &SkipReport::operator+=(const SkipReport &other) {
  unbalanced_links += other.unbalanced_links;
  empty += other.empty;
  too_short += other.too_short;
  too_long += other.too_long;
  return *this;
}

namespace {

bool StartsWith(std::string_view s, size_t pos, std::string_view prefix) {
  return s.substr(pos, prefix.size()) == prefix;
}

bool AtLineStart(std::string_view s, size_t pos) {
  while (pos > 0 && (s[pos - 1] == ' ' || s[pos - 1] == '\t')) --pos;
  return pos == 0 || s[pos - 1] == '\n';
}

// End (one past) of a nested open/close construct starting at pos, or npos.
size_t SkipNested(std::string_view s, size_t pos, std::string_view open,
                  std::string_view close) {
  size_t depth = 0;
  size_t i = pos;
  while (i < s.size()) {
    if (StartsWith(s, i, open)) {
      ++depth;
      i += open.size();
    } else if (StartsWith(s, i, close)) {
      --depth;
      i += close.size();
      if (depth == 0) return i;
    } else {
      ++i;
    }
  }
  return std::string_view::npos;
}

// Removes comments, templates, tables and references from a whole document.
std::string StripBlockMarkup(const CorpusDocument &doc) {
  std::string_view s = doc.wikitext;
  std::string out;
  out.reserve(s.size());
  auto fail = [&](const std::string &what, size_t at) {
    throw ParseError("document " + doc.id + ": " + what + " in wikitext", at);
  };
  size_t i = 0;
  while (i < s.size()) {
    if (StartsWith(s, i, "<!--")) {
      size_t end = s.find("-->", i + 4);
      if (end == std::string_view::npos) fail("unterminated comment", i);
      i = end + 3;
    } else if (StartsWith(s, i, "{{")) {
      size_t end = SkipNested(s, i, "{{", "}}");
      if (end == std::string_view::npos) fail("unbalanced template", i);
      i = end;
    } else if (StartsWith(s, i, "{|") && AtLineStart(s, i)) {
      size_t end = SkipNested(s, i, "{|", "|}");
      if (end == std::string_view::npos) fail("unterminated table", i);
      i = end;
    } else if (StartsWith(s, i, "<ref") && i + 4 < s.size() &&
               (s[i + 4] == '>' || s[i + 4] == ' ' || s[i + 4] == '/')) {
      size_t tag_end = s.find('>', i);
      if (tag_end == std::string_view::npos) fail("unterminated reference", i);
      if (s[tag_end - 1] == '/') {
        i = tag_end + 1;
        continue;
      }
      size_t close = s.find("</ref>", tag_end);
      if (close == std::string_view::npos) fail("unterminated reference", i);
      i = close + 6;
    } else {
      out.push_back(s[i++]);
    }
  }
  return out;
}

bool IsBlank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\r';
  });
}

// Joins the content lines of one block: headings and magic words dropped,
// list markers stripped.
std::string JoinBlockLines(const std::vector<std::string_view> &lines) {
  std::string out;
  for (std::string_view raw : lines) {
    std::string line = text::Trim(raw);
    if (line.empty()) continue;
    if (line.size() >= 2 && line.front() == '=' && line.back() == '=') continue;
    if (line.size() >= 4 && line.starts_with("__") && line.ends_with("__")) continue;
    size_t k = 0;
    while (k < line.size() &&
           (line[k] == '*' || line[k] == '#' || line[k] == ':' || line[k] == ';')) {
      ++k;
    }
    if (k > 0) line = text::Trim(std::string_view(line).substr(k));
    if (line.empty()) continue;
    if (!out.empty()) out.push_back('\n');
    out += line;
  }
  return out;
}

bool IsAsciiLower(char32_t c) { return c >= U'a' && c <= U'z'; }

char32_t FoldAscii(char32_t c) {
  return (c >= U'A' && c <= U'Z') ? c - U'A' + U'a' : c;
}

// Link targets in these namespaces are not article links; the whole link is
// removed from the text.
bool IsNamespacedTarget(std::u32string_view target) {
  size_t colon = target.find(U':');
  if (colon == std::u32string_view::npos || colon == 0) return false;
  std::u32string prefix;
  for (char32_t c : target.substr(0, colon)) {
    if (!text::IsSpace(c)) prefix.push_back(FoldAscii(c));
  }
  static const std::array<std::u32string_view, 18> kNamespaces = {
      U"file",   U"image",  U"category", U"template", U"wikipedia", U"help",
      U"portal", U"special", U"media",   U"wp",       U"文件",      U"图像",
      U"分类",   U"模板",   U"维基百科", U"檔案",     U"圖像",      U"分類"};
  for (std::u32string_view ns : kNamespaces) {
    if (prefix == ns) return true;
  }
  // Interlanguage links: [[fr:...]], [[zh-yue:...]].
  size_t n = 0;
  while (n < prefix.size() && IsAsciiLower(prefix[n])) ++n;
  if (n < 2 || n > 3) return false;
  while (n < prefix.size()) {
    if (prefix[n] != U'-') return false;
    size_t start = ++n;
    while (n < prefix.size() && IsAsciiLower(prefix[n])) ++n;
    if (n == start) return false;
  }
  return true;
}

bool StartsWith(std::u32string_view s, size_t pos, std::u32string_view prefix) {
  return s.substr(pos, prefix.size()) == prefix;
}

size_t FindClosingLink(std::u32string_view s, size_t pos) {
  size_t depth = 0;
  size_t i = pos;
  while (i < s.size()) {
    if (StartsWith(s, i, U"[[")) {
      ++depth;
      i += 2;
    } else if (StartsWith(s, i, U"]]")) {
      --depth;
      i += 2;
      if (depth == 0) return i;
    } else {
      ++i;
    }
  }
  return std::u32string_view::npos;
}

struct Entity {
  std::u32string_view name;
  char32_t value;
};
constexpr std::array<Entity, 6> kEntities = {{{U"&nbsp;", U' '},
                                              {U"&amp;", U'&'},
                                              {U"&lt;", U'<'},
                                              {U"&gt;", U'>'},
                                              {U"&quot;", U'"'},
                                              {U"&ndash;", U'–'}}};

class InlineRenderer {
 public:
  // False when the block has unbalanced link markup.
  bool Render(std::u32string_view s, bool with_anchors) {
    size_t i = 0;
    while (i < s.size()) {
      if (StartsWith(s, i, U"[[")) {
        size_t end = FindClosingLink(s, i);
        if (end == std::u32string_view::npos) return false;
        if (!RenderLink(s.substr(i + 2, end - i - 4), with_anchors)) return false;
        i = end;
      } else if (StartsWith(s, i, U"]]")) {
        return false;
      } else if (s[i] == U'[' && (StartsWith(s, i + 1, U"http://") ||
                                  StartsWith(s, i + 1, U"https://") ||
                                  StartsWith(s, i + 1, U"//"))) {
        size_t close = s.find(U']', i);
        if (close == std::u32string_view::npos) {
          Emit(s[i++]);
          continue;
        }
        std::u32string_view inner = s.substr(i + 1, close - i - 1);
        size_t space = inner.find(U' ');
        if (space != std::u32string_view::npos) {
          if (!Render(inner.substr(space + 1), false)) return false;
        }
        i = close + 1;
      } else if (StartsWith(s, i, U"''")) {
        i += StartsWith(s, i, U"'''") ? 3 : 2;
      } else if (s[i] == U'<' && SkipTag(s, &i)) {
        continue;
      } else if (s[i] == U'&' && DecodeEntity(s, &i)) {
        continue;
      } else {
        Emit(s[i++]);
      }
    }
    return true;
  }

  std::u32string Finish() {
    while (!out_.empty() && out_.back() == U' ') out_.pop_back();
    return std::move(out_);
  }

  std::vector<Anchor> anchors;

 private:
  void Emit(char32_t c) {
    if (text::IsSpace(c)) {
      if (!out_.empty() && out_.back() != U' ') out_.push_back(U' ');
    } else {
      out_.push_back(c);
    }
  }

  bool RenderLink(std::u32string_view inner, bool with_anchors) {
    bool leading_colon = !inner.empty() && inner.front() == U':';
    if (leading_colon) {
      inner.remove_prefix(1);
    } else if (IsNamespacedTarget(inner)) {
      return true;
    }
    std::u32string_view target = inner;
    std::u32string_view surface = inner;
    size_t pipe = inner.find(U'|');
    if (pipe != std::u32string_view::npos) {
      target = inner.substr(0, pipe);
      surface = inner.substr(pipe + 1);
    }
    // A nested link or formatting inside the label renders as plain text.
    InlineRenderer label;
    if (!label.Render(surface, false)) return false;
    std::u32string plain = label.Finish();
    if (plain.empty()) return true;

    size_t hash = target.find(U'#');
    if (hash != std::u32string_view::npos) target = target.substr(0, hash);
    std::u32string title(target);
    std::replace(title.begin(), title.end(), U'_', U' ');
    std::string title_utf8 = text::Trim(text::Encode(title));

    size_t start = out_.size();
    for (char32_t c : plain) Emit(c);
    size_t end = out_.size();
    if (with_anchors && !title_utf8.empty() && end > start) {
      anchors.push_back({start, end, title_utf8});
    }
    return true;
  }

  // Removes an HTML-like tag; <br> becomes a space.
  bool SkipTag(std::u32string_view s, size_t *i) {
    size_t j = *i + 1;
    if (j < s.size() && s[j] == U'/') ++j;
    if (j >= s.size() || !((s[j] >= U'a' && s[j] <= U'z') ||
                           (s[j] >= U'A' && s[j] <= U'Z'))) {
      return false;
    }
    size_t name_start = j;
    while (j < s.size() && s[j] != U'>' && s[j] != U'<' && s[j] != U'\n') ++j;
    if (j >= s.size() || s[j] != U'>') return false;
    std::u32string name;
    for (size_t k = name_start;
         k < j && s[k] != U' ' && s[k] != U'/' && s[k] != U'>'; ++k) {
      name.push_back(FoldAscii(s[k]));
    }
    if (name == U"br") Emit(U' ');
    *i = j + 1;
    return true;
  }

  bool DecodeEntity(std::u32string_view s, size_t *i) {
    for (const Entity &e : kEntities) {
      if (StartsWith(s, *i, e.name)) {
        Emit(e.value);
        *i += e.name.size();
        return true;
      }
    }
    return false;
  }

  std::u32string out_;
};

}  // namespace

std::vector<Paragraph> ExtractParagraphs(const CorpusDocument &doc,
                                         SkipReport *report) {
  SkipReport local;
  SkipReport &skips = report ? *report : local;
  const std::string stripped = StripBlockMarkup(doc);

  std::vector<std::vector<std::string_view>> blocks;
  std::vector<std::string_view> current;
  std::string_view rest = stripped;
  while (true) {
    size_t nl = rest.find('\n');
    std::string_view line = rest.substr(0, nl);
    if (IsBlank(line)) {
      if (!current.empty()) blocks.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(line);
    }
    if (nl == std::string_view::npos) break;
    rest.remove_prefix(nl + 1);
  }
  if (!current.empty()) blocks.push_back(std::move(current));

  std::vector<Paragraph> out;
  for (size_t b = 0; b < blocks.size(); ++b) {
    std::string joined = JoinBlockLines(blocks[b]);
    if (joined.empty()) {
      ++skips.empty;
      continue;
    }
    InlineRenderer renderer;
    if (!renderer.Render(text::Decode(joined), true)) {
      ++skips.unbalanced_links;
      continue;
    }
    std::u32string plain = renderer.Finish();
    if (plain.empty()) {
      ++skips.empty;
      continue;
    }
    Paragraph p;
    p.id = doc.id + "#" + std::to_string(b);
    p.lang = doc.lang;
    p.text = text::Encode(plain);
    p.token_count = text::Tokenize(plain, doc.lang).size();
    p.anchors = std::move(renderer.anchors);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Paragraph> FilterByTokens(std::vector<Paragraph> paragraphs,
                                      const TokenBounds &bounds,
                                      SkipReport *report) {
  std::vector<Paragraph> out;
  for (Paragraph &p : paragraphs) {
    if (p.token_count < bounds.min_tokens) {
      if (report) ++report->too_short;
    } else if (p.token_count > bounds.max_tokens) {
      if (report) ++report->too_long;
    } else {
      out.push_back(std::move(p));
    }
  }
  return out;
}

Domain ClassifyDomain(const Paragraph &p, Backend &backend) {
  return backend.Classify({p.text, p.lang}).domain;
}

}  // namespace kg2i
