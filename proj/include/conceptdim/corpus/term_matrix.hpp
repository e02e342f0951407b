#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "conceptdim/corpus/ngram.hpp"

namespace conceptdim::corpus {

// Sparse term-document matrix. Terms are kept in lexicographic order; cells
// are stored term-major with ascending document indices.
struct TermDocumentMatrix {
  struct Cell {
    std::uint32_t doc = 0;
    std::uint32_t count = 0;
    double weight = 0.0;  // tf-idf, zero until weighted
  };

  std::vector<std::string> terms;
  std::vector<std::string> docs;
  std::vector<std::vector<Cell>> cells;     // one vector per term
  std::vector<std::size_t> doc_lengths;     // total n-grams per document

  std::size_t document_frequency(std::size_t term_index) const {
    return cells[term_index].size();
  }
};

// Assembles the matrix from per-document n-gram counts, dropping terms that
// occur in fewer than min_df documents. Document lengths are the pre-filter
// n-gram totals.
TermDocumentMatrix build_term_document_matrix(
    const std::vector<std::pair<std::string, NgramCounts>>& documents, std::size_t min_df);

struct TfidfSelection {
  TermDocumentMatrix matrix;
  bool kept_all = false;  // k was at least the vocabulary size
};

// tf = count / document length, idf = ln(N / df). Keeps the k terms with the
// largest maximum tf-idf over documents, ties broken lexicographically.
TfidfSelection tfidf_and_select(const TermDocumentMatrix& matrix, std::size_t k);

// Coordinate-list CSV ("term,doc,count" with header), term-major order.
std::string to_coo_csv_string(const TermDocumentMatrix& matrix);
void write_coo_csv_file(const std::string& path, const TermDocumentMatrix& matrix);
TermDocumentMatrix read_coo_csv_file(const std::string& path);

}  // namespace conceptdim::corpus
