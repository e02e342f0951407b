#include "conceptdim/corpus/pipeline.hpp"

#include <cmath>
#include <cstdlib>

#include "conceptdim/errors.hpp"
#include "conceptdim/io_util.hpp"

namespace conceptdim::corpus {

conceptdim::FormalContext binarize(const EmbeddingMatrix& embeddings) {
  return binarize_table(embedding_to_table(embeddings));
}

conceptdim::FormalContext binarize_table(const NumericTable& table) {
  std::vector<DynamicBitset> rows;
  rows.reserve(table.values.size());
  for (const auto& row : table.values) {
    DynamicBitset bits(table.column_names.size());
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] > 0.0) bits.set(j);
    rows.push_back(std::move(bits));
  }
  return conceptdim::FormalContext(table.row_names, table.column_names, std::move(rows));
}

conceptdim::IntervalPatternStructure build_interval_ps(const EmbeddingMatrix& embeddings) {
  std::vector<std::string> attributes;
  attributes.reserve(embeddings.dims);
  for (std::size_t j = 1; j <= embeddings.dims; ++j)
    attributes.push_back("f" + std::to_string(j));
  std::vector<IntervalTuple> delta;
  delta.reserve(embeddings.values.size());
  for (const auto& row : embeddings.values) delta.push_back(IntervalTuple::point(row));
  return conceptdim::IntervalPatternStructure(embeddings.docs, std::move(attributes),
                                              std::move(delta));
}

conceptdim::IntervalPatternStructure pattern_structure_from_table(const NumericTable& table) {
  std::vector<IntervalTuple> delta;
  delta.reserve(table.values.size());
  for (const auto& row : table.values) delta.push_back(IntervalTuple::point(row));
  return conceptdim::IntervalPatternStructure(table.row_names, table.column_names,
                                              std::move(delta));
}

namespace {

std::size_t parse_positive(const std::string& key, const std::string& value) {
  char* end = nullptr;
  long v = std::strtol(value.c_str(), &end, 10);
  if (!end || *end != '\0' || v < 1)
    throw ConfigError("config key '" + key + "' needs a positive integer, got '" + value + "'");
  return static_cast<std::size_t>(v);
}

}  // namespace

PipelineConfig parse_config_file(const std::string& path) {
  PipelineConfig config;
  std::vector<std::string> lines = split_lines(read_file(path));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(path + " line " + std::to_string(i + 1) + ": expected key = value");
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (key == "language") {
      config.language = value;
    } else if (key == "n") {
      config.n = parse_positive(key, value);
    } else if (key == "d") {
      config.d = parse_positive(key, value);
    } else if (key == "k") {
      config.k = parse_positive(key, value);
    } else if (key == "min_df") {
      config.min_df = parse_positive(key, value);
    } else if (key == "theta") {
      char* end = nullptr;
      double v = std::strtod(value.c_str(), &end);
      if (!end || *end != '\0' || !std::isfinite(v) || v < 0.0)
        throw ConfigError("config key 'theta' needs a nonnegative real, got '" + value + "'");
      config.theta = v;
    } else if (key == "seed") {
      char* end = nullptr;
      unsigned long long v = std::strtoull(value.c_str(), &end, 10);
      if (!end || *end != '\0')
        throw ConfigError("config key 'seed' needs an integer, got '" + value + "'");
      config.seed = v;
    } else if (key == "stopword_path") {
      config.stopword_path = value;
    } else {
      throw ConfigError(path + " line " + std::to_string(i + 1) + ": unknown key '" + key + "'");
    }
  }
  return config;
}

}  // namespace conceptdim::corpus
