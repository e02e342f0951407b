#pragma once

#include <string>
#include <vector>

#include "conceptdim/corpus/preprocess.hpp"

namespace conceptdim::corpus {

struct CorpusLoad {
  std::vector<CorpusDocument> documents;  // sorted by id
  std::vector<std::string> errors;        // per-file problems (encoding, io)
};

// Directory of UTF-8 plain-text files, one document per file; the id is the
// file name without its extension. Invalid files are reported, not thrown.
CorpusLoad load_corpus_dir(const std::string& path);

// JSONL with one {"id": ..., "text": ...} object per line.
CorpusLoad load_corpus_jsonl(const std::string& path);

// Dispatches on whether the path is a directory or a .jsonl file.
CorpusLoad load_corpus(const std::string& path);

// Preprocessed documents as JSONL {"id": ..., "tokens": [...]}, sorted by id.
std::string tokens_to_jsonl(const std::vector<CorpusDocument>& documents);
void write_tokens_jsonl_file(const std::string& path,
                             const std::vector<CorpusDocument>& documents);
std::vector<CorpusDocument> read_tokens_jsonl_file(const std::string& path);

}  // namespace conceptdim::corpus
