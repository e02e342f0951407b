#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace conceptdim::corpus {

inline constexpr const char* kSepToken = "<SEP>";
inline constexpr const char* kNumToken = "<NUM>";
inline constexpr const char* kNameToken = "<NAME>";

struct CorpusDocument {
  std::string id;
  std::string raw_text;
  std::vector<std::string> tokens;
  bool empty_flagged = false;  // nothing left after preprocessing
};

using Lemmatizer = std::function<std::string(const std::string&)>;

// Naive suffix stripper for English plurals: ies -> y; es after x/z/ch/sh is
// dropped; a final s is dropped unless the word ends in ss/us/is.
std::string lemmatize_english(const std::string& word);

struct PreprocessConfig {
  std::string language = "english";
  std::unordered_set<std::string> stopwords;
  Lemmatizer lemmatizer;  // set by make_preprocess_config
};

// Languages: english (naive lemmatizer), russian/bengali/none (identity).
// Anything else is a configuration error. Stopwords come from the optional
// file (one token per line, UTF-8); there is no compiled-in list.
PreprocessConfig make_preprocess_config(const std::string& language,
                                        const std::optional<std::string>& stopword_path);

std::unordered_set<std::string> load_stopwords(const std::string& path);

// Lowercases and tokenizes the raw text, replaces numerals, sentence
// separators and mid-sentence capitalized words by the <NUM>/<SEP>/<NAME>
// class tokens, drops stop words, and lemmatizes what remains. A document
// with no tokens afterwards is flagged for exclusion.
CorpusDocument preprocess(CorpusDocument doc, const PreprocessConfig& config);

}  // namespace conceptdim::corpus
