#include "conceptdim/corpus/corpus_io.hpp"

#include <algorithm>
#include <filesystem>

#include <json.hpp>

#include "conceptdim/errors.hpp"
#include "conceptdim/io_util.hpp"

namespace conceptdim::corpus {

namespace fs = std::filesystem;

CorpusLoad load_corpus_dir(const std::string& path) {
  CorpusLoad load;
  std::error_code ec;
  if (!fs::is_directory(path, ec))
    throw InvalidInputError("corpus path is not a directory: " + path);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(path)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const fs::path& file : files) {
    std::string text;
    try {
      text = read_file(file.string());
    } catch (const Error& e) {
      load.errors.emplace_back(e.what());
      continue;
    }
    if (auto bad = find_invalid_utf8(text)) {
      load.errors.push_back(file.string() + ": invalid UTF-8 at byte " + std::to_string(*bad));
      continue;
    }
    CorpusDocument doc;
    doc.id = file.stem().string();
    doc.raw_text = std::move(text);
    load.documents.push_back(std::move(doc));
  }
  std::sort(load.documents.begin(), load.documents.end(),
            [](const CorpusDocument& a, const CorpusDocument& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < load.documents.size(); ++i)
    if (load.documents[i].id == load.documents[i - 1].id)
      load.errors.push_back("duplicate document id: " + load.documents[i].id);
  return load;
}

CorpusLoad load_corpus_jsonl(const std::string& path) {
  CorpusLoad load;
  std::string text = read_file(path);
  if (auto bad = find_invalid_utf8(text))
    throw InvalidInputError(path + ": invalid UTF-8 at byte " + std::to_string(*bad));
  std::vector<std::string> lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(lines[i]);
      CorpusDocument doc;
      doc.id = j.at("id").get<std::string>();
      doc.raw_text = j.at("text").get<std::string>();
      load.documents.push_back(std::move(doc));
    } catch (const nlohmann::json::exception& e) {
      load.errors.push_back(path + " line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  std::sort(load.documents.begin(), load.documents.end(),
            [](const CorpusDocument& a, const CorpusDocument& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < load.documents.size(); ++i)
    if (load.documents[i].id == load.documents[i - 1].id)
      load.errors.push_back("duplicate document id: " + load.documents[i].id);
  return load;
}

CorpusLoad load_corpus(const std::string& path) {
  std::error_code ec;
  if (fs::is_directory(path, ec)) return load_corpus_dir(path);
  if (fs::path(path).extension() == ".jsonl") return load_corpus_jsonl(path);
  throw InvalidInputError("corpus must be a directory of .txt files or a .jsonl file: " + path);
}

std::string tokens_to_jsonl(const std::vector<CorpusDocument>& documents) {
  std::string out;
  for (const CorpusDocument& doc : documents) {
    nlohmann::ordered_json j;
    j["id"] = doc.id;
    j["tokens"] = doc.tokens;
    out += j.dump();
    out += '\n';
  }
  return out;
}

void write_tokens_jsonl_file(const std::string& path,
                             const std::vector<CorpusDocument>& documents) {
  atomic_write_file(path, tokens_to_jsonl(documents));
}

std::vector<CorpusDocument> read_tokens_jsonl_file(const std::string& path) {
  std::vector<CorpusDocument> docs;
  std::vector<std::string> lines = split_lines(read_file(path));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    try {
      nlohmann::json j = nlohmann::json::parse(lines[i]);
      CorpusDocument doc;
      doc.id = j.at("id").get<std::string>();
      doc.tokens = j.at("tokens").get<std::vector<std::string>>();
      docs.push_back(std::move(doc));
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInputError(path + " line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return docs;
}

}  // namespace conceptdim::corpus
