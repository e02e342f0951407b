#pragma once

#include <optional>
#include <string>

#include "conceptdim/context.hpp"
#include "conceptdim/corpus/matrix_csv.hpp"
#include "conceptdim/corpus/svd.hpp"
#include "conceptdim/pattern_structure.hpp"

namespace conceptdim::corpus {

// Threshold binarization: (doc, f_j) holds iff embedding component j is
// strictly positive. Zero components stay off.
conceptdim::FormalContext binarize(const EmbeddingMatrix& embeddings);

// Same binarization over an arbitrary numeric table, keeping its column names.
conceptdim::FormalContext binarize_table(const NumericTable& table);

// Degenerate intervals [v, v] per embedding component.
conceptdim::IntervalPatternStructure build_interval_ps(const EmbeddingMatrix& embeddings);

conceptdim::IntervalPatternStructure pattern_structure_from_table(const NumericTable& table);

// Pipeline parameters; the config file is plain "key = value" lines with '#'
// comments. Keys: language, n, d, k, min_df, theta, seed, stopword_path.
struct PipelineConfig {
  std::string language = "english";
  std::size_t n = 1;
  std::size_t d = 5;
  std::size_t k = 5000;
  std::size_t min_df = 2;
  double theta = 0.0;
  std::uint64_t seed = 0;  // recorded for provenance; the pipeline is deterministic
  std::optional<std::string> stopword_path;
};

PipelineConfig parse_config_file(const std::string& path);

}  // namespace conceptdim::corpus
