#ifndef KG2I_CORPUS_H_
#define KG2I_CORPUS_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "kg2i/jsonl.h"
#include "kg2i/types.h"

namespace kg2i {

class Backend;

// Linked span [start, end) in codepoints, as written in the source markup.
struct Anchor {
  size_t start = 0;
  size_t end = 0;
  std::string target_title;

  bool operator==(const Anchor &) const = default;
};

struct Paragraph {
  std::string id;
  Lang lang = Lang::kEn;
  std::string text;
  size_t token_count = 0;
  std::optional<Domain> domain;
  std::vector<Anchor> anchors;

  bool operator==(const Paragraph &) const = default;
};

ordered_json ToJson(const Paragraph &p);
Paragraph ParagraphFromJson(const json &j);

// Raw corpus record: {"id", "lang", "title", "wikitext"}.
struct CorpusDocument {
  std::string id;
  Lang lang = Lang::kEn;
  std::string title;
  std::string wikitext;
  size_t byte_offset = 0;  // of the record in its file
};

// Reads every document. Bad JSON, missing fields and unknown languages raise
// ParseError with the byte offset of the offending record.
std::vector<CorpusDocument> ReadCorpus(std::istream &in);

struct SkipReport {
  size_t unbalanced_links = 0;
  size_t empty = 0;
  size_t too_short = 0;
  size_t too_long = 0;

  size_t total() const { return unbalanced_links + too_short + too_long; }
  SkipReport &operator+=(const SkipReport &other);
};

// Markup stripping and paragraph splitting. Templates, tables, references,
// comments and file/category links are removed from the whole document
// before it is split on blank lines; each block is then rendered to plain
// text with its link anchors. Paragraph ids are "<doc id>#<block index>".
// A block with unbalanced [[ ]] is skipped and counted. Unterminated
// templates, tables, comments or references make the document malformed
// (ParseError with the absolute byte offset of the opening markup).
std::vector<Paragraph> ExtractParagraphs(const CorpusDocument &doc,
                                         SkipReport *report);

struct TokenBounds {
  size_t min_tokens = 50;
  size_t max_tokens = 512;
};

// Keeps paragraphs with min_tokens <= token_count <= max_tokens.
std::vector<Paragraph> FilterByTokens(std::vector<Paragraph> paragraphs,
                                      const TokenBounds &bounds,
                                      SkipReport *report);

Domain ClassifyDomain(const Paragraph &p, Backend &backend);

}  // namespace kg2i

#endif  // KG2I_CORPUS_H_
