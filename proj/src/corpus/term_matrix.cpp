#include "conceptdim/corpus/term_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "conceptdim/errors.hpp"
#include "conceptdim/io_util.hpp"

namespace conceptdim::corpus {

TermDocumentMatrix build_term_document_matrix(
    const std::vector<std::pair<std::string, NgramCounts>>& documents, std::size_t min_df) {
  TermDocumentMatrix matrix;
  matrix.docs.reserve(documents.size());
  matrix.doc_lengths.reserve(documents.size());
  std::map<std::string, std::vector<TermDocumentMatrix::Cell>> by_term;
  for (std::uint32_t d = 0; d < documents.size(); ++d) {
    const auto& [id, grams] = documents[d];
    matrix.docs.push_back(id);
    matrix.doc_lengths.push_back(grams.total);
    for (const auto& [term, count] : grams.counts)
      by_term[term].push_back({d, count, 0.0});
  }
  for (auto& [term, cells] : by_term) {
    if (cells.size() < min_df) continue;
    matrix.terms.push_back(term);
    matrix.cells.push_back(std::move(cells));
  }
  return matrix;
}

TfidfSelection tfidf_and_select(const TermDocumentMatrix& matrix, std::size_t k) {
  if (k < 1) throw InvalidInputError("keyterm budget k must be at least 1");
  TermDocumentMatrix weighted = matrix;
  const double n_docs = static_cast<double>(matrix.docs.size());
  std::vector<double> best_weight(matrix.terms.size(), 0.0);
  for (std::size_t t = 0; t < weighted.terms.size(); ++t) {
    double idf = std::log(n_docs / static_cast<double>(weighted.cells[t].size()));
    for (auto& cell : weighted.cells[t]) {
      double len = static_cast<double>(weighted.doc_lengths[cell.doc]);
      double tf = len > 0.0 ? static_cast<double>(cell.count) / len : 0.0;
      cell.weight = tf * idf;
      best_weight[t] = std::max(best_weight[t], cell.weight);
    }
  }

  TfidfSelection selection;
  if (k >= weighted.terms.size()) {
    selection.matrix = std::move(weighted);
    selection.kept_all = true;
    return selection;
  }

  std::vector<std::size_t> order(weighted.terms.size());
  for (std::size_t t = 0; t < order.size(); ++t) order[t] = t;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (best_weight[a] != best_weight[b]) return best_weight[a] > best_weight[b];
    return weighted.terms[a] < weighted.terms[b];
  });
  order.resize(k);
  std::sort(order.begin(), order.end());  // keep lexicographic term order

  selection.matrix.docs = weighted.docs;
  selection.matrix.doc_lengths = weighted.doc_lengths;
  for (std::size_t t : order) {
    selection.matrix.terms.push_back(std::move(weighted.terms[t]));
    selection.matrix.cells.push_back(std::move(weighted.cells[t]));
  }
  return selection;
}

std::string to_coo_csv_string(const TermDocumentMatrix& matrix) {
  std::string out = "term,doc,count\n";
  for (std::size_t t = 0; t < matrix.terms.size(); ++t) {
    for (const auto& cell : matrix.cells[t]) {
      out += matrix.terms[t];
      out += ',';
      out += matrix.docs[cell.doc];
      out += ',';
      out += std::to_string(cell.count);
      out += '\n';
    }
  }
  return out;
}

void write_coo_csv_file(const std::string& path, const TermDocumentMatrix& matrix) {
  for (const auto& id : matrix.docs)
    if (id.find_first_of(",\"\n\r") != std::string::npos)
      throw InvalidInputError("document id contains a reserved character: " + id);
  atomic_write_file(path, to_coo_csv_string(matrix));
}

TermDocumentMatrix read_coo_csv_file(const std::string& path) {
  std::vector<std::string> lines = split_lines(read_file(path));
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines[0] != "term,doc,count")
    throw InvalidInputError("COO CSV " + path + ": missing 'term,doc,count' header");

  std::map<std::string, std::uint32_t> doc_index;
  std::vector<std::pair<std::string, NgramCounts>> per_doc;
  struct Entry {
    std::string term;
    std::uint32_t doc;
    std::uint32_t count;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    std::size_t c1 = line.find(',');
    std::size_t c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw InvalidInputError("COO CSV " + path + " line " + std::to_string(i + 1) +
                              ": expected term,doc,count");
    std::string term = line.substr(0, c1);
    std::string doc = line.substr(c1 + 1, c2 - c1 - 1);
    long count = std::strtol(line.c_str() + c2 + 1, nullptr, 10);
    if (term.empty() || doc.empty() || count <= 0)
      throw InvalidInputError("COO CSV " + path + " line " + std::to_string(i + 1) +
                              ": invalid cell");
    auto [it, inserted] = doc_index.try_emplace(doc, static_cast<std::uint32_t>(per_doc.size()));
    if (inserted) per_doc.emplace_back(doc, NgramCounts{});
    entries.push_back({std::move(term), it->second, static_cast<std::uint32_t>(count)});
  }
  for (const Entry& e : entries) {
    per_doc[e.doc].second.counts[e.term] += e.count;
    per_doc[e.doc].second.total += e.count;
  }
  return build_term_document_matrix(per_doc, 1);
}

}  // namespace conceptdim::corpus
