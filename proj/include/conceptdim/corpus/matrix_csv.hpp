#pragma once

#include <string>
#include <vector>

#include "conceptdim/corpus/svd.hpp"

namespace conceptdim::corpus {

// Numeric objects-by-attributes table serialized as CSV: header row of
// column names with a blank first cell, then one row per object with its
// name in the first column and real-valued cells.
struct NumericTable {
  std::vector<std::string> row_names;
  std::vector<std::string> column_names;
  std::vector<std::vector<double>> values;
};

std::string to_numeric_csv_string(const NumericTable& table);
void write_numeric_csv_file(const std::string& path, const NumericTable& table);
NumericTable read_numeric_csv_file(const std::string& path);

NumericTable embedding_to_table(const EmbeddingMatrix& embeddings);

}  // namespace conceptdim::corpus
