#pragma once

#include <string>
#include <vector>

#include "conceptdim/corpus/term_matrix.hpp"

namespace conceptdim::corpus {

// Document embeddings from a rank-d factorization: rows are U_d * Sigma_d.
struct EmbeddingMatrix {
  std::vector<std::string> docs;
  std::size_t dims = 0;
  std::vector<std::vector<double>> values;  // |docs| x dims
  std::vector<double> singular_values;      // length dims, nonincreasing
};

// Best rank-d approximation of a dense row-major matrix. Signs are fixed so
// the largest-magnitude entry of each left singular vector is positive,
// making the factorization deterministic.
EmbeddingMatrix truncated_svd(const std::vector<std::vector<double>>& dense,
                              std::vector<std::string> row_names, std::size_t d);

// Same over the tf-idf weights of a term-document matrix. By default the
// documents are the embedded rows; with transpose = true the terms are,
// flipping which side becomes the objects of the downstream context.
EmbeddingMatrix truncated_svd(const TermDocumentMatrix& matrix, std::size_t d,
                              bool transpose = false);

}  // namespace conceptdim::corpus
