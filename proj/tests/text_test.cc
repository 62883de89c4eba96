// Copyright 2026 The stylonet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stylonet/text.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "stylonet/error.h"
#include "stylonet/io.h"
#include "test_data.h"

namespace stylonet {
namespace {

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const Token& t : tokens) out.push_back(t.surface);
  return out;
}

TEST(Tokenize, SplitsOnWhitespaceAndPunctuation) {
  EXPECT_EQ(surfaces(tokenize("In the middle of the road")),
            (std::vector<std::string>{"in", "the", "middle", "of", "the", "road"}));
  EXPECT_EQ(surfaces(tokenize("stone.Never,  forget;(this)")),
            (std::vector<std::string>{"stone", "never", "forget", "this"}));
}

TEST(Tokenize, EmptyInput) {
  EXPECT_TRUE(tokenize("").empty());
  EXPECT_TRUE(tokenize("  ...  ").empty());
}

TEST(Tokenize, PositionsAreConsecutive) {
  const auto tokens = tokenize("a b, c");
  ASSERT_EQ(tokens.size(), 3u);
  for (std::size_t i = 0; i < tokens.size(); ++i) EXPECT_EQ(tokens[i].position, i);
}

TEST(Tokenize, KeepsWordInternalApostrophes) {
  EXPECT_EQ(surfaces(tokenize("Don't 'quote' o’clock")),
            (std::vector<std::string>{"don't", "quote", "o'clock"}));
}

TEST(Tokenize, DigitsSeparateWords) {
  EXPECT_EQ(surfaces(tokenize("abc123def 42")), (std::vector<std::string>{"abc", "def"}));
}

TEST(Tokenize, CaseFoldingIsOptional) {
  EXPECT_EQ(surfaces(tokenize("The ROAD", false)), (std::vector<std::string>{"The", "ROAD"}));
}

TEST(Tokenize, NonAsciiLetters) {
  EXPECT_EQ(surfaces(tokenize("Café ÉTÉ")), (std::vector<std::string>{"café", "été"}));
}

TEST(Tokenize, RejectsMalformedUtf8) {
  const std::string bad = std::string("ok ") + '\xC3' + '(';
  try {
    tokenize(bad);
    FAIL() << "expected EncodingError";
  } catch (const EncodingError& e) {
    EXPECT_EQ(e.byte_offset(), 4u);
  }
  EXPECT_THROW(tokenize(std::string("\xFF")), EncodingError);
  EXPECT_THROW(tokenize(std::string("\xE2\x82")), EncodingError);
}

TEST(Tokenize, PoemTokenCount) {
  const auto tokens = tokenize(read_file(testdata::data_path("poem.txt")));
  EXPECT_EQ(tokens.size(), 82u);
}

TEST(RemoveStopwords, EmptyPolicyIsIdentity) {
  const Document doc = testdata::from_lemmas({"a", "b", "a"});
  EXPECT_EQ(remove_stopwords(doc, StopwordPolicy{}).tokens, doc.tokens);
}

TEST(RemoveStopwords, AllStopwordsGiveEmptyDocument) {
  StopwordPolicy policy;
  policy.words = {"the", "of"};
  EXPECT_EQ(remove_stopwords(testdata::from_lemmas({"the", "of", "the"}), policy).size(), 0u);
}

TEST(RemoveStopwords, KeepsOriginalPositions) {
  StopwordPolicy policy;
  policy.words = {"the"};
  const Document out = remove_stopwords(testdata::from_lemmas({"the", "cat", "the", "dog"}), policy);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out.tokens[0].position, 1u);
  EXPECT_EQ(out.tokens[1].position, 3u);
}

TEST(RemoveStopwords, PoemMatchesPublishedRow) {
  Document doc{"poem", "", tokenize(read_file(testdata::data_path("poem.txt")))};
  doc = remove_stopwords(doc, default_english_stopwords());
  std::vector<std::string> expected = testdata::poem_stream();
  std::replace(expected.begin(), expected.end(), std::string("fatigue"), std::string("fatigued"));
  std::replace(expected.begin(), expected.end(), std::string("retina"), std::string("retinas"));
  EXPECT_EQ(doc.lemmas(), expected);
}

TEST(Lemmatize, LexiconAndIdentityFallback) {
  const LemmaLexicon lex = read_lexicon(testdata::data_path("lexicon_en.tsv"));
  const Document doc = lemmatize(testdata::from_lemmas({"fatigued", "retinas", "zebra"}), lex);
  EXPECT_EQ(doc.lemmas(), (std::vector<std::string>{"fatigue", "retina", "zebra"}));
}

TEST(Lemmatize, Idempotent) {
  const LemmaLexicon lex = read_lexicon(testdata::data_path("lexicon_en.tsv"));
  Document doc{"poem", "", tokenize(read_file(testdata::data_path("poem.txt")))};
  const Document once = lemmatize(doc, lex);
  Document again = once;
  for (Token& t : again.tokens) t.surface = t.lemma;
  EXPECT_EQ(lemmatize(again, lex).lemmas(), once.lemmas());
}

TEST(LemmaLexicon, ChainsCollapse) {
  LemmaLexicon lex;
  EXPECT_TRUE(lex.add("forgotten", "forgot"));
  EXPECT_TRUE(lex.add("forgot", "forget"));
  EXPECT_EQ(lex.lookup("forgotten"), "forget");
  EXPECT_EQ(lex.lookup("forget"), "forget");
}

TEST(LemmaLexicon, DuplicateReportsReplacement) {
  LemmaLexicon lex;
  EXPECT_TRUE(lex.add("stones", "stone"));
  EXPECT_FALSE(lex.add("stones", "rock"));
  EXPECT_EQ(lex.lookup("stones"), "rock");
}

TEST(LemmaLexicon, CycleThrows) {
  LemmaLexicon lex;
  lex.add("a", "b");
  EXPECT_THROW(lex.add("b", "a"), ArgumentError);
}

TEST(CorpusStopwords, Intersection) {
  const auto policy = derive_corpus_stopwords(
      {testdata::from_lemmas({"a", "b", "c"}), testdata::from_lemmas({"b", "c", "d"})});
  EXPECT_EQ(policy.words, (std::set<std::string, std::less<>>{"b", "c"}));
  EXPECT_EQ(policy.mode, StopwordPolicy::Mode::kCorpusIntersection);
}

TEST(CorpusStopwords, SingleDocumentIsItsVocabulary) {
  const auto policy = derive_corpus_stopwords({testdata::from_lemmas({"x", "y", "x"})});
  EXPECT_EQ(policy.words, (std::set<std::string, std::less<>>{"x", "y"}));
}

TEST(CorpusStopwords, DisjointAndEmpty) {
  EXPECT_TRUE(derive_corpus_stopwords({testdata::from_lemmas({"a"}), testdata::from_lemmas({"b"})})
                  .words.empty());
  EXPECT_THROW(derive_corpus_stopwords({}), ArgumentError);
}

TEST(ShuffleTokens, PreservesMultisetAndIsDeterministic) {
  std::vector<std::string> lemmas;
  for (int i = 0; i < 1000; ++i) lemmas.push_back("w" + std::to_string(i % 37));
  const Document doc = testdata::from_lemmas(lemmas);
  const Document a = shuffle_tokens(doc, 7);
  const Document b = shuffle_tokens(doc, 7);
  const Document c = shuffle_tokens(doc, 8);
  EXPECT_EQ(a.tokens, b.tokens);
  auto sa = a.lemmas(), sc = c.lemmas();
  std::sort(sa.begin(), sa.end());
  std::sort(sc.begin(), sc.end());
  std::sort(lemmas.begin(), lemmas.end());
  EXPECT_EQ(sa, lemmas);
  EXPECT_EQ(sc, lemmas);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.tokens[i].position, i);
}

TEST(DefaultStopwords, ContainsFunctionWordsOnly) {
  const auto policy = default_english_stopwords();
  EXPECT_TRUE(policy.contains("the"));
  EXPECT_TRUE(policy.contains("of"));
  for (const char* content : {"never", "forget", "event", "middle", "road", "stone"}) {
    EXPECT_FALSE(policy.contains(content)) << content;
  }
}

}  // namespace
}  // namespace stylonet
