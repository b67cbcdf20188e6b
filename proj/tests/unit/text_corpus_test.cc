#include <sstream>

#include "doctest.h"
#include "kg2i/corpus.h"
#include "kg2i/errors.h"
#include "kg2i/mock_backend.h"
#include "kg2i/text.h"

using namespace kg2i;

namespace {

CorpusDocument Doc(const std::string &wikitext, Lang lang = Lang::kEn) {
  return {"d", lang, "T", wikitext, 0};
}

// Independent token count: split on ASCII/ideographic whitespace, and for zh
// count every CJK codepoint as its own token.
size_t OracleTokens(const std::u32string &s, Lang lang) {
  size_t n = 0;
  bool run = false;
  for (char32_t c : s) {
    bool space = c == U' ' || c == U'\n' || c == U'\t' || c == 0x3000;
    bool cjk = lang == Lang::kZh && c >= 0x4E00 && c <= 0x9FFF;
    if (space) {
      run = false;
    } else if (cjk) {
      ++n;
      run = false;
    } else if (!run) {
      ++n;
      run = true;
    }
  }
  return n;
}

}  // namespace

TEST_SUITE("text") {
  TEST_CASE("utf8 round trip and codepoint slicing") {
    const std::string s = "蒂姆·库克 (Tim) ü";
    CHECK(text::Encode(text::Decode(s)) == s);
    CHECK(text::CharLength(s) == 13);
    CHECK(text::Slice(s, 0, 5) == "蒂姆·库克");
    CHECK(text::Slice(s, 7, 10) == "Tim");
  }

  TEST_CASE("token counts agree with a naive counter") {
    const char *samples[] = {
        "Timothy Cook (born November 1, 1960), is a business executive.",
        "  leading   and trailing  ",
        "中国位于亚洲东部，首都是北京。",
        "iPhone 15于2023年发布 in Cupertino",
        "",
    };
    for (const char *s : samples) {
      for (Lang lang : kAllLangs) {
        CHECK(text::CountTokens(s, lang) == OracleTokens(text::Decode(s), lang));
        CHECK(text::Tokenize(text::Decode(s), lang).size() ==
              OracleTokens(text::Decode(s), lang));
      }
    }
  }

  TEST_CASE("normalize collapses whitespace and folds ASCII case in en only") {
    CHECK(text::Normalize("  Steve \t Jobs ", Lang::kEn) == "steve jobs");
    CHECK(text::Normalize("Steve  Jobs", Lang::kZh) == "Steve Jobs");
    CHECK(text::Normalize("Émile", Lang::kEn) == "Émile");
  }

  TEST_CASE("whole-word search") {
    std::u32string hay = text::Decode("he studied and died; Died.");
    CHECK(text::FindAll(hay, U"died", true) == std::vector<size_t>{15});
    CHECK(text::FindAll(hay, U"died", false).size() == 2);
    std::u32string zh = text::Decode("乔布斯于2011年逝世");
    CHECK(text::FindAll(zh, text::Decode("逝世"), true).size() == 1);
  }
}

TEST_SUITE("corpus") {
  TEST_CASE("links become anchors whose offsets slice the surface") {
    SkipReport skips;
    auto ps = ExtractParagraphs(
        Doc("[[Tim Cook|Timothy Cook]] leads [[Apple Inc.|Apple]] in [[Cupertino]]."),
        &skips);
    REQUIRE(ps.size() == 1);
    const Paragraph &p = ps[0];
    CHECK(p.text == "Timothy Cook leads Apple in Cupertino.");
    REQUIRE(p.anchors.size() == 3);
    CHECK(p.anchors[0].target_title == "Tim Cook");
    CHECK(text::Slice(p.text, p.anchors[0].start, p.anchors[0].end) == "Timothy Cook");
    CHECK(text::Slice(p.text, p.anchors[1].start, p.anchors[1].end) == "Apple");
    CHECK(p.anchors[2].target_title == "Cupertino");
    CHECK(p.id == "d#0");
  }

  TEST_CASE("zh anchors use codepoint offsets") {
    auto ps = ExtractParagraphs(Doc("[[蒂姆·库克]]现任[[苹果公司|蘋果]]首席执行官。", Lang::kZh),
                                nullptr);
    REQUIRE(ps.size() == 1);
    REQUIRE(ps[0].anchors.size() == 2);
    CHECK(ps[0].anchors[1].start == 7);
    CHECK(ps[0].anchors[1].end == 9);
    CHECK(ps[0].anchors[1].target_title == "苹果公司");
  }

  TEST_CASE("templates, references and comments are removed before splitting") {
    auto ps = ExtractParagraphs(
        Doc("{{Infobox|name={{nested}}}}First<ref name=\"a\">cite</ref> block.<!-- x -->\n\n"
            "Second<ref name=\"b\"/> block."),
        nullptr);
    REQUIRE(ps.size() == 2);
    CHECK(ps[0].text == "First block.");
    CHECK(ps[1].text == "Second block.");
    CHECK(ps[1].id == "d#1");
  }

  TEST_CASE("a block with unbalanced links is skipped and counted") {
    SkipReport skips;
    auto ps = ExtractParagraphs(Doc("Good [[link]] here.\n\nBad [[link here."), &skips);
    CHECK(ps.size() == 1);
    CHECK(skips.unbalanced_links == 1);
  }

  TEST_CASE("unterminated template is a parse error at its offset in the wikitext") {
    CorpusDocument d = Doc("abc {{Infobox");
    d.byte_offset = 100;
    try {
      ExtractParagraphs(d, nullptr);
      FAIL("expected ParseError");
    } catch (const ParseError &e) {
      CHECK(e.byte_offset() == 4);
    }
  }

  TEST_CASE("token bounds are inclusive") {
    auto make = [](size_t n) {
      Paragraph p;
      p.token_count = n;
      p.id = std::to_string(n);
      return p;
    };
    SkipReport skips;
    auto kept = FilterByTokens({make(49), make(50), make(512), make(513)},
                               TokenBounds{50, 512}, &skips);
    REQUIRE(kept.size() == 2);
    CHECK(kept[0].token_count == 50);
    CHECK(kept[1].token_count == 512);
    CHECK(skips.too_short == 1);
    CHECK(skips.too_long == 1);
  }

  TEST_CASE("paragraph token counts match the tokenizer on exact bounds") {
    std::string fifty;
    for (int i = 0; i < 50; ++i) fifty += (i ? " w" : "w") + std::to_string(i);
    auto ps = ExtractParagraphs(Doc(fifty), nullptr);
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].token_count == 50);
    CHECK(FilterByTokens(ps, TokenBounds{50, 512}, nullptr).size() == 1);
  }

  TEST_CASE("corpus reader reports the byte offset of a bad record") {
    std::istringstream in(
        "{\"id\":\"a\",\"lang\":\"en\",\"title\":\"A\",\"wikitext\":\"x\"}\n"
        "{\"id\":\"b\",\"lang\":\"fr\",\"title\":\"B\",\"wikitext\":\"y\"}\n");
    try {
      ReadCorpus(in);
      FAIL("expected ParseError");
    } catch (const ParseError &e) {
      CHECK(e.byte_offset() == 50);
    }
    std::istringstream bad("{\"id\":\"a\",\"lang\":\"en\"}\n");
    CHECK_THROWS_AS(ReadCorpus(bad), ParseError);
  }

  TEST_CASE("mock classifier falls back to GPE without keyword hits") {
    MockBackend mock(json{{"classify",
                           {{"rules", {{{"domain", "Person"}, {"keywords", {"born"}}}}}}}});
    Paragraph p;
    p.text = "Nothing relevant here.";
    CHECK(ClassifyDomain(p, mock) == Domain::kGPE);
    p.text = "She was born in 1971.";
    CHECK(ClassifyDomain(p, mock) == Domain::kPerson);
    auto r = mock.Classify({"Born, born, reborn.", Lang::kEn});
    CHECK(r.confidence == doctest::Approx(1.0));
  }
}
