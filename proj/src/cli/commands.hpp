#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace conceptdim::cli {

// Exit code contract: 0 success, 2 input/config error, 3 resource bound,
// 1 unexpected failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUnexpected = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;

struct IngestOptions {
  std::string corpus_path;
  std::string out_path;
  std::optional<std::string> config_path;
  std::optional<std::string> language;
  std::optional<std::string> stopword_path;
};

struct EmbedOptions {
  std::string tokens_path;
  std::string out_path;
  std::optional<std::string> config_path;
  std::optional<std::size_t> n;
  std::optional<std::size_t> d;
  std::optional<std::size_t> k;
  std::optional<std::size_t> min_df;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> matrix_out;  // COO term-document export
  bool transpose = false;                 // embed terms instead of documents
};

struct ContextOptions {
  std::string in_path;  // embedding / numeric CSV
  std::string out_path;
  std::string repr = "binary";  // binary | interval
  std::string format = "cxt";   // cxt | csv, binary representation only
};

struct DimOptions {
  std::string in_path;  // .cxt (binary) or .csv (interval pattern structure)
  std::string out_path;
  std::size_t ell = 16;
  std::string mode = "exact";
  double theta = 0.0;
  std::optional<std::string> label;
  std::optional<int> n;
  std::optional<int> d;
  std::size_t max_concepts = 0;  // 0 = library default
  std::size_t threads = 0;       // 0 = CONCEPTDIM_THREADS / hardware
};

struct ReportOptions {
  std::vector<std::string> result_paths;
  std::optional<std::string> out_csv;
};

int cmd_ingest(const IngestOptions& options, std::ostream& out, std::ostream& err);
int cmd_embed(const EmbedOptions& options, std::ostream& out, std::ostream& err);
int cmd_context(const ContextOptions& options, std::ostream& out, std::ostream& err);
int cmd_dim(const DimOptions& options, std::ostream& out, std::ostream& err);
int cmd_report(const ReportOptions& options, std::ostream& out, std::ostream& err);

}  // namespace conceptdim::cli
