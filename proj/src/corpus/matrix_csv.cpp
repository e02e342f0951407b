#include "conceptdim/corpus/matrix_csv.hpp"

#include <cmath>
#include <cstdlib>

#include "conceptdim/errors.hpp"
#include "conceptdim/io_util.hpp"

namespace conceptdim::corpus {

namespace {

void check_name(const std::string& name) {
  if (name.empty()) throw InvalidInputError("empty name in numeric table");
  if (name.find_first_of(",\"\n\r") != std::string::npos)
    throw InvalidInputError("name contains a reserved character: " + name);
}

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      cells.emplace_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return cells;
}

}  // namespace

std::string to_numeric_csv_string(const NumericTable& table) {
  for (const auto& n : table.row_names) check_name(n);
  for (const auto& n : table.column_names) check_name(n);
  if (table.values.size() != table.row_names.size())
    throw InvalidInputError("numeric table row count mismatch");
  std::string out;
  for (const auto& n : table.column_names) {
    out += ',';
    out += n;
  }
  out += '\n';
  for (std::size_t r = 0; r < table.values.size(); ++r) {
    if (table.values[r].size() != table.column_names.size())
      throw InvalidInputError("numeric table column count mismatch");
    out += table.row_names[r];
    for (double v : table.values[r]) {
      out += ',';
      out += double_to_string(v);
    }
    out += '\n';
  }
  return out;
}

void write_numeric_csv_file(const std::string& path, const NumericTable& table) {
  atomic_write_file(path, to_numeric_csv_string(table));
}

NumericTable read_numeric_csv_file(const std::string& path) {
  std::vector<std::string> lines = split_lines(read_file(path));
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw InvalidInputError("numeric CSV " + path + ": empty input");

  NumericTable table;
  std::vector<std::string> header = split_cells(lines[0]);
  table.column_names.assign(header.begin() + 1, header.end());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> cells = split_cells(lines[i]);
    if (cells.size() != table.column_names.size() + 1)
      throw InvalidInputError("numeric CSV " + path + " row " + std::to_string(i + 1) +
                              ": wrong cell count");
    table.row_names.push_back(cells[0]);
    std::vector<double> row;
    row.reserve(cells.size() - 1);
    for (std::size_t c = 1; c < cells.size(); ++c) {
      const std::string& cell = cells[c];
      char* end = nullptr;
      double v = std::strtod(cell.c_str(), &end);
      if (cell.empty() || end != cell.c_str() + cell.size() || !std::isfinite(v))
        throw InvalidInputError("numeric CSV " + path + " row " + std::to_string(i + 1) +
                                ": bad numeric cell '" + cell + "'");
      row.push_back(v);
    }
    table.values.push_back(std::move(row));
  }
  return table;
}

NumericTable embedding_to_table(const EmbeddingMatrix& embeddings) {
  NumericTable table;
  table.row_names = embeddings.docs;
  for (std::size_t j = 1; j <= embeddings.dims; ++j)
    table.column_names.push_back("f" + std::to_string(j));
  table.values = embeddings.values;
  return table;
}

}  // namespace conceptdim::corpus
