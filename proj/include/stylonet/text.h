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

#ifndef STYLONET_TEXT_H_
#define STYLONET_TEXT_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace stylonet {

struct Token {
  std::string surface;
  std::string lemma;     // equals surface until lemmatized
  std::size_t position;  // 0-based index in the original stream

  bool operator==(const Token&) const = default;
};

struct Document {
  std::string id;
  std::string label;
  std::vector<Token> tokens;

  std::size_t size() const { return tokens.size(); }  // N_T
  std::vector<std::string> lemmas() const;
};

// Surface form -> lemma, case-folded. Lookups fall back to the identity.
// Chains (a -> b, b -> c) are collapsed on insertion so that the lemma of a
// lemma is always itself.
class LemmaLexicon {
 public:
  LemmaLexicon() = default;

  // Adds or replaces an entry. Returns false when `surface` was already
  // present (the new entry wins). Throws ArgumentError on a cycle.
  bool add(std::string_view surface, std::string_view lemma);

  std::string lookup(std::string_view surface) const;
  std::size_t size() const { return entries_.size(); }

 private:
  void resolve();

  std::map<std::string, std::string, std::less<>> raw_;
  std::map<std::string, std::string, std::less<>> entries_;
};

struct StopwordPolicy {
  enum class Mode { kExplicitList, kCorpusIntersection };

  Mode mode = Mode::kExplicitList;
  std::set<std::string, std::less<>> words;

  bool contains(std::string_view lemma) const { return words.contains(lemma); }
};

// The stop-word list shipped with the library (English function words).
StopwordPolicy default_english_stopwords();

// Splits UTF-8 text into maximal runs of letters. Apostrophes between two
// letters stay inside the word; digits, punctuation and everything else
// separate words. Throws EncodingError on malformed UTF-8.
std::vector<Token> tokenize(std::string_view raw, bool case_fold = true);

Document remove_stopwords(const Document& doc, const StopwordPolicy& policy);

Document lemmatize(const Document& doc, const LemmaLexicon& lexicon);

// Lemmas present in every document. Throws ArgumentError on an empty corpus.
StopwordPolicy derive_corpus_stopwords(const std::vector<Document>& corpus);

// Uniform random permutation of the tokens, deterministic in `seed`.
// Positions are renumbered 0..N-1.
Document shuffle_tokens(const Document& doc, std::uint64_t seed);

// Case folding used by tokenize (ASCII and Latin-1 letters).
std::string fold_case(std::string_view word);

}  // namespace stylonet

#endif  // STYLONET_TEXT_H_
