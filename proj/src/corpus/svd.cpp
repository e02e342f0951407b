#include "conceptdim/corpus/svd.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "conceptdim/errors.hpp"

namespace conceptdim::corpus {

EmbeddingMatrix truncated_svd(const std::vector<std::vector<double>>& dense,
                              std::vector<std::string> row_names, std::size_t d) {
  const std::size_t rows = dense.size();
  const std::size_t cols = rows ? dense[0].size() : 0;
  if (row_names.size() != rows)
    throw InvalidInputError("row name count does not match matrix");
  if (d < 1 || d > rows || d > cols)
    throw InvalidInputError("embedding dimension d must satisfy 1 <= d <= min(rows, cols)");

  Eigen::MatrixXd a(rows, cols);
  bool nonzero = false;
  for (std::size_t r = 0; r < rows; ++r) {
    if (dense[r].size() != cols)
      throw InvalidInputError("matrix rows have inconsistent lengths");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!std::isfinite(dense[r][c]))
        throw InvalidInputError("matrix entries must be finite");
      a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = dense[r][c];
      if (dense[r][c] != 0.0) nonzero = true;
    }
  }
  if (!nonzero) throw InvalidInputError("cannot factorize an all-zero matrix");

  Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::MatrixXd u = svd.matrixU();
  Eigen::VectorXd sigma = svd.singularValues();

  EmbeddingMatrix out;
  out.docs = std::move(row_names);
  out.dims = d;
  out.singular_values.resize(d);
  out.values.assign(rows, std::vector<double>(d, 0.0));
  for (std::size_t j = 0; j < d; ++j) {
    auto col = static_cast<Eigen::Index>(j);
    // Deterministic sign: largest-magnitude component of u_j positive.
    Eigen::Index pivot = 0;
    double best = 0.0;
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
      double mag = std::fabs(u(r, col));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    double sign = u(pivot, col) < 0.0 ? -1.0 : 1.0;
    out.singular_values[j] = sigma(col);
    for (std::size_t r = 0; r < rows; ++r)
      out.values[r][j] = sign * u(static_cast<Eigen::Index>(r), col) * sigma(col);
  }
  return out;
}

EmbeddingMatrix truncated_svd(const TermDocumentMatrix& matrix, std::size_t d,
                              bool transpose) {
  if (transpose) {
    std::vector<std::vector<double>> dense(matrix.terms.size(),
                                           std::vector<double>(matrix.docs.size(), 0.0));
    for (std::size_t t = 0; t < matrix.terms.size(); ++t)
      for (const auto& cell : matrix.cells[t]) dense[t][cell.doc] = cell.weight;
    return truncated_svd(dense, matrix.terms, d);
  }
  std::vector<std::vector<double>> dense(matrix.docs.size(),
                                         std::vector<double>(matrix.terms.size(), 0.0));
  for (std::size_t t = 0; t < matrix.terms.size(); ++t)
    for (const auto& cell : matrix.cells[t]) dense[cell.doc][t] = cell.weight;
  return truncated_svd(dense, matrix.docs, d);
}

}  // namespace conceptdim::corpus
