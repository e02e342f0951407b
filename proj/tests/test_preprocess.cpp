#include <doctest.h>

#include "conceptdim/corpus/ngram.hpp"
#include "conceptdim/corpus/preprocess.hpp"
#include "conceptdim/errors.hpp"

using namespace conceptdim::corpus;
using conceptdim::ConfigError;

namespace {

PreprocessConfig english_with_stopwords(std::initializer_list<const char*> words) {
  PreprocessConfig config = make_preprocess_config("english", std::nullopt);
  for (const char* w : words) config.stopwords.insert(w);
  return config;
}

std::vector<std::string> run(const std::string& text, const PreprocessConfig& config) {
  CorpusDocument doc;
  doc.id = "t";
  doc.raw_text = text;
  return preprocess(std::move(doc), config).tokens;
}

}  // namespace

TEST_CASE("stop words, separators and casing") {
  PreprocessConfig config = english_with_stopwords({"the"});
  CHECK(run("The cat, the CAT!", config) ==
        std::vector<std::string>{"cat", "<SEP>", "cat", "<SEP>"});
}

TEST_CASE("empty documents are flagged") {
  PreprocessConfig config = english_with_stopwords({});
  CorpusDocument doc;
  doc.id = "e";
  doc.raw_text = "";
  CorpusDocument out = preprocess(std::move(doc), config);
  CHECK(out.empty_flagged);
  CHECK(out.tokens.empty());

  CorpusDocument only_stop;
  only_stop.raw_text = "the the";
  CHECK(preprocess(std::move(only_stop), english_with_stopwords({"the"})).empty_flagged);
}

TEST_CASE("numerals become class tokens and plurals are stripped") {
  PreprocessConfig config = english_with_stopwords({});
  CHECK(run("42 cats", config) == std::vector<std::string>{"<NUM>", "cat"});
}

TEST_CASE("proper names mid-sentence become class tokens") {
  PreprocessConfig config = english_with_stopwords({});
  CHECK(run("Then Bob spoke.", config) ==
        std::vector<std::string>{"then", "<NAME>", "spoke", "<SEP>"});
  // Sentence-initial capitalization is not a name signal.
  CHECK(run("Walls stand. Then Bob left.", config) ==
        std::vector<std::string>{"wall", "stand", "<SEP>", "then", "<NAME>", "left", "<SEP>"});
  // A dropped stop word does not reset the sentence position.
  PreprocessConfig with_the = english_with_stopwords({"the"});
  CHECK(run("dog. The Smith", with_the) ==
        std::vector<std::string>{"dog", "<SEP>", "<NAME>"});
}

TEST_CASE("separator runs collapse to one token") {
  PreprocessConfig config = english_with_stopwords({});
  CHECK(run("go!!! stop...", config) ==
        std::vector<std::string>{"go", "<SEP>", "stop", "<SEP>"});
}

TEST_CASE("english lemmatizer suffix rules") {
  CHECK(lemmatize_english("cats") == "cat");
  CHECK(lemmatize_english("ponies") == "pony");
  CHECK(lemmatize_english("boxes") == "box");
  CHECK(lemmatize_english("churches") == "church");
  CHECK(lemmatize_english("glasses") == "glass");
  CHECK(lemmatize_english("houses") == "house");
  CHECK(lemmatize_english("glass") == "glass");
  CHECK(lemmatize_english("bus") == "bus");
  CHECK(lemmatize_english("axis") == "axis");
  CHECK(lemmatize_english("ties") == "tie");
  CHECK(lemmatize_english("is") == "is");
}

TEST_CASE("unknown language is a configuration error") {
  CHECK_THROWS_AS(make_preprocess_config("klingon", std::nullopt), ConfigError);
  // Known languages without built-in morphology use the identity lemmatizer.
  PreprocessConfig ru = make_preprocess_config("russian", std::nullopt);
  CHECK(run("cats", ru) == std::vector<std::string>{"cats"});
}

TEST_CASE("utf-8 text passes through tokenization") {
  PreprocessConfig config = make_preprocess_config("none", std::nullopt);
  auto tokens = run("\xD0\xBA\xD0\xBE\xD1\x82 and \xD0\xBF\xD1\x91\xD1\x81.", config);
  REQUIRE(tokens.size() == 4);
  CHECK(tokens[0] == "\xD0\xBA\xD0\xBE\xD1\x82");
  CHECK(tokens[1] == "and");
  CHECK(tokens[2] == "\xD0\xBF\xD1\x91\xD1\x81");
  CHECK(tokens[3] == "<SEP>");
}

TEST_CASE("ngram extraction") {
  std::vector<std::string> abc{"a", "b", "c"};
  NgramCounts bigrams = extract_ngrams(abc, 2);
  CHECK(bigrams.total == 2);
  CHECK(bigrams.counts.at("a_b") == 1);
  CHECK(bigrams.counts.at("b_c") == 1);

  std::vector<std::string> a{"a"};
  CHECK(extract_ngrams(a, 2).counts.empty());

  std::vector<std::string> sep{"a", "<SEP>", "b"};
  CHECK(extract_ngrams(sep, 2).counts.empty());  // separator blocks both windows
  NgramCounts unigrams = extract_ngrams(sep, 1);
  CHECK(unigrams.total == 2);  // separators never become n-grams themselves
  CHECK(unigrams.counts.count("<SEP>") == 0);
  CHECK(unigrams.counts.at("a") == 1);

  CHECK_THROWS_AS(extract_ngrams(abc, 0), conceptdim::InvalidInputError);
}

TEST_CASE("ngram totals match the window count minus blocked windows") {
  std::vector<std::string> tokens{"x", "y", "<SEP>", "x", "y", "z", "<SEP>", "w"};
  for (std::size_t n = 1; n <= 4; ++n) {
    NgramCounts grams = extract_ngrams(tokens, n);
    std::size_t expect = 0;
    for (std::size_t s = 0; s + n <= tokens.size(); ++s) {
      bool blocked = false;
      for (std::size_t k = 0; k < n; ++k) blocked = blocked || tokens[s + k] == "<SEP>";
      if (!blocked) ++expect;
    }
    CHECK(grams.total == expect);
  }
}
