#include "conceptdim/corpus/preprocess.hpp"

#include <cctype>
#include <sstream>

#include "conceptdim/errors.hpp"
#include "conceptdim/io_util.hpp"

namespace conceptdim::corpus {

namespace {

bool is_ascii_digit(unsigned char c) { return c >= '0' && c <= '9'; }
bool is_ascii_upper(unsigned char c) { return c >= 'A' && c <= 'Z'; }
bool is_ascii_lower(unsigned char c) { return c >= 'a' && c <= 'z'; }
bool is_ascii_letter(unsigned char c) { return is_ascii_upper(c) || is_ascii_lower(c); }

// Characters that end a sentence or clause; each run becomes one <SEP>.
bool is_separator_char(unsigned char c) {
  return c == '.' || c == ',' || c == '!' || c == '?' || c == ';' || c == ':';
}

// Token characters: ASCII letters and digits, plus all non-ASCII bytes so
// UTF-8 scripts pass through intact.
bool is_token_char(unsigned char c) {
  return is_ascii_letter(c) || is_ascii_digit(c) || c >= 0x80;
}

bool all_digits(const std::string& t) {
  for (unsigned char c : t)
    if (!is_ascii_digit(c)) return false;
  return !t.empty();
}

// Capitalized shape: one ASCII uppercase letter followed by lowercase ones.
bool capitalized_word(const std::string& t) {
  if (t.size() < 2 || !is_ascii_upper(static_cast<unsigned char>(t[0]))) return false;
  for (std::size_t i = 1; i < t.size(); ++i)
    if (!is_ascii_lower(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

std::string ascii_lower(std::string t) {
  for (char& c : t)
    if (is_ascii_upper(static_cast<unsigned char>(c))) c = static_cast<char>(c - 'A' + 'a');
  return t;
}

bool ends_with(const std::string& s, const char* suffix) {
  std::string_view sv(suffix);
  return s.size() >= sv.size() && std::string_view(s).substr(s.size() - sv.size()) == sv;
}

}  // namespace

std::string lemmatize_english(const std::string& word) {
  if (word.size() >= 5 && ends_with(word, "ies"))
    return word.substr(0, word.size() - 3) + "y";
  if (word.size() >= 4 && (ends_with(word, "xes") || ends_with(word, "zes") ||
                           ends_with(word, "ches") || ends_with(word, "shes") ||
                           ends_with(word, "sses")))
    return word.substr(0, word.size() - 2);
  if (word.size() >= 3 && ends_with(word, "s") && !ends_with(word, "ss") &&
      !ends_with(word, "us") && !ends_with(word, "is"))
    return word.substr(0, word.size() - 1);
  return word;
}

std::unordered_set<std::string> load_stopwords(const std::string& path) {
  std::unordered_set<std::string> words;
  std::string text = read_file(path);
  if (auto bad = find_invalid_utf8(text))
    throw InvalidInputError("stopword file " + path + ": invalid UTF-8 at byte " +
                            std::to_string(*bad));
  for (const std::string& line : split_lines(text)) {
    std::string word(trim(line));
    if (!word.empty()) words.insert(std::move(word));
  }
  return words;
}

PreprocessConfig make_preprocess_config(const std::string& language,
                                        const std::optional<std::string>& stopword_path) {
  PreprocessConfig config;
  config.language = language;
  if (language == "english" || language == "en") {
    config.lemmatizer = lemmatize_english;
  } else if (language == "russian" || language == "ru" || language == "bengali" ||
             language == "bn" || language == "none") {
    config.lemmatizer = [](const std::string& w) { return w; };
  } else {
    throw ConfigError("unknown language: " + language);
  }
  if (stopword_path) config.stopwords = load_stopwords(*stopword_path);
  return config;
}

CorpusDocument preprocess(CorpusDocument doc, const PreprocessConfig& config) {
  if (!config.lemmatizer)
    throw ConfigError("preprocess config has no lemmatizer; use make_preprocess_config");
  const std::string& text = doc.raw_text;
  std::vector<std::string> out;
  bool sentence_start = true;
  bool pending_separator = false;

  auto flush_separator = [&] {
    if (pending_separator) {
      out.emplace_back(kSepToken);
      pending_separator = false;
    }
  };

  std::size_t i = 0;
  while (i < text.size()) {
    auto c = static_cast<unsigned char>(text[i]);
    if (is_token_char(c)) {
      flush_separator();
      std::size_t start = i;
      while (i < text.size() && is_token_char(static_cast<unsigned char>(text[i]))) ++i;
      std::string token = text.substr(start, i - start);
      if (all_digits(token)) {
        out.emplace_back(kNumToken);
      } else if (!sentence_start && capitalized_word(token)) {
        out.emplace_back(kNameToken);
      } else {
        std::string word = ascii_lower(std::move(token));
        if (!config.stopwords.contains(word)) {
          word = config.lemmatizer(word);
          if (!word.empty()) out.push_back(std::move(word));
        }
      }
      sentence_start = false;
    } else if (is_separator_char(c)) {
      pending_separator = true;
      sentence_start = true;
      ++i;
    } else {
      // Whitespace and remaining punctuation only delimit tokens.
      ++i;
    }
  }
  flush_separator();

  doc.tokens = std::move(out);
  doc.empty_flagged = doc.tokens.empty();
  return doc;
}

}  // namespace conceptdim::corpus
