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

#include <algorithm>
#include <sstream>

#include "stylonet/error.h"
#include "stylonet/random.h"

namespace stylonet {

extern const char* const kEnglishStopwords;  // generated from data/

namespace {

// Decodes one code point starting at raw[i]; advances i. Throws on
// malformed input.
char32_t decode(std::string_view raw, std::size_t& i) {
  const auto byte = [&](std::size_t k) {
    return static_cast<unsigned char>(raw[k]);
  };
  const std::size_t start = i;
  const unsigned char b0 = byte(i);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    throw EncodingError("invalid UTF-8 lead byte", start);
  }
  if (start + len > raw.size()) {
    throw EncodingError("truncated UTF-8 sequence", start);
  }
  for (int k = 1; k < len; ++k) {
    const unsigned char b = byte(start + k);
    if ((b & 0xC0) != 0x80) {
      throw EncodingError("invalid UTF-8 continuation byte", start + k);
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    throw EncodingError("invalid UTF-8 code point", start);
  }
  i = start + len;
  return cp;
}

void encode(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_letter(char32_t c) {
  if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) return true;
  if (c >= 0xC0 && c <= 0x24F) return c != 0xD7 && c != 0xF7;
  if (c >= 0x386 && c <= 0x3FF) return c != 0x387;  // Greek
  if (c >= 0x400 && c <= 0x4FF) return true;        // Cyrillic
  return false;
}

bool is_apostrophe(char32_t c) { return c == U'\'' || c == 0x2019; }

char32_t lower(char32_t c) {
  if (c >= 'A' && c <= 'Z') return c + 0x20;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 0x20;
  if (c >= 0x391 && c <= 0x3AB && c != 0x3A2) return c + 0x20;
  if (c >= 0x410 && c <= 0x42F) return c + 0x20;
  if (c >= 0x400 && c <= 0x40F) return c + 0x50;
  return c;
}

}  // namespace

std::vector<std::string> Document::lemmas() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.lemma);
  return out;
}

std::string fold_case(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  std::size_t i = 0;
  while (i < word.size()) encode(lower(decode(word, i)), out);
  return out;
}

std::vector<Token> tokenize(std::string_view raw, bool case_fold) {
  std::vector<char32_t> cps;
  cps.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size();) cps.push_back(decode(raw, i));

  std::vector<Token> tokens;
  std::string word;
  const auto flush = [&] {
    if (word.empty()) return;
    Token t;
    t.surface = word;
    t.lemma = word;
    t.position = tokens.size();
    tokens.push_back(std::move(t));
    word.clear();
  };
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t c = cps[i];
    if (is_letter(c)) {
      encode(case_fold ? lower(c) : c, word);
    } else if (is_apostrophe(c) && !word.empty() && i + 1 < cps.size() &&
               is_letter(cps[i + 1])) {
      word.push_back('\'');
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

bool LemmaLexicon::add(std::string_view surface, std::string_view lemma) {
  const std::string key = fold_case(surface);
  const bool fresh = !raw_.contains(key);
  raw_[key] = fold_case(lemma);
  resolve();
  return fresh;
}

void LemmaLexicon::resolve() {
  entries_.clear();
  for (const auto& [surface, lemma] : raw_) {
    std::string target = lemma;
    std::size_t hops = 0;
    for (auto it = raw_.find(target); it != raw_.end() && it->second != target;
         it = raw_.find(target)) {
      target = it->second;
      if (++hops > raw_.size()) {
        throw ArgumentError("lemma lexicon has a cycle through '" + surface + "'");
      }
    }
    entries_[surface] = target;
  }
}

std::string LemmaLexicon::lookup(std::string_view surface) const {
  const auto it = entries_.find(surface);
  return it == entries_.end() ? std::string(surface) : it->second;
}

StopwordPolicy default_english_stopwords() {
  StopwordPolicy policy;
  policy.mode = StopwordPolicy::Mode::kExplicitList;
  std::istringstream in(kEnglishStopwords);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) policy.words.insert(line);
  }
  return policy;
}

Document remove_stopwords(const Document& doc, const StopwordPolicy& policy) {
  Document out{doc.id, doc.label, {}};
  out.tokens.reserve(doc.tokens.size());
  for (const Token& t : doc.tokens) {
    if (!policy.contains(t.lemma)) out.tokens.push_back(t);
  }
  return out;
}

Document lemmatize(const Document& doc, const LemmaLexicon& lexicon) {
  Document out = doc;
  for (Token& t : out.tokens) t.lemma = lexicon.lookup(t.surface);
  return out;
}

StopwordPolicy derive_corpus_stopwords(const std::vector<Document>& corpus) {
  if (corpus.empty()) {
    throw ArgumentError("derive_corpus_stopwords: empty corpus");
  }
  StopwordPolicy policy;
  policy.mode = StopwordPolicy::Mode::kCorpusIntersection;
  for (const Token& t : corpus.front().tokens) policy.words.insert(t.lemma);
  for (std::size_t d = 1; d < corpus.size() && !policy.words.empty(); ++d) {
    std::set<std::string, std::less<>> vocab;
    for (const Token& t : corpus[d].tokens) vocab.insert(t.lemma);
    std::erase_if(policy.words,
                  [&](const std::string& w) { return !vocab.contains(w); });
  }
  return policy;
}

Document shuffle_tokens(const Document& doc, std::uint64_t seed) {
  Document out = doc;
  Rng rng(seed);
  rng.shuffle(std::span<Token>(out.tokens));
  for (std::size_t i = 0; i < out.tokens.size(); ++i) out.tokens[i].position = i;
  return out;
}

}  // namespace stylonet
