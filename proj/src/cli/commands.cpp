#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "conceptdim/concept_enum.hpp"
#include "conceptdim/context_io.hpp"
#include "conceptdim/corpus/corpus_io.hpp"
#include "conceptdim/corpus/pipeline.hpp"
#include "conceptdim/corpus/preprocess.hpp"
#include "conceptdim/corpus/term_matrix.hpp"
#include "conceptdim/dimension.hpp"
#include "conceptdim/errors.hpp"
#include "conceptdim/io_util.hpp"

namespace conceptdim::cli {

namespace fs = std::filesystem;
using corpus::PipelineConfig;

namespace {

template <typename Fn>
int run_guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const InvalidInputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "unexpected error: " << e.what() << "\n";
    return kExitUnexpected;
  }
}

PipelineConfig load_config(const std::optional<std::string>& path) {
  return path ? corpus::parse_config_file(*path) : PipelineConfig{};
}

std::string path_stem(const std::string& path) {
  std::string stem = fs::path(path).stem().string();
  return stem.empty() ? path : stem;
}

// Round half-up to the nearest integer, as in the reported aggregates.
long long round_half_up(double x) {
  return static_cast<long long>(std::floor(x + 0.5));
}

}  // namespace

int cmd_ingest(const IngestOptions& options, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    PipelineConfig config = load_config(options.config_path);
    if (options.language) config.language = *options.language;
    if (options.stopword_path) config.stopword_path = *options.stopword_path;

    corpus::CorpusLoad load = corpus::load_corpus(options.corpus_path);
    if (!load.errors.empty()) {
      for (const std::string& e : load.errors) err << "error: " << e << "\n";
      return kExitInput;
    }
    if (load.documents.empty()) {
      err << "error: corpus contains no documents: " << options.corpus_path << "\n";
      return kExitInput;
    }

    corpus::PreprocessConfig preprocess_config =
        corpus::make_preprocess_config(config.language, config.stopword_path);
    std::vector<corpus::CorpusDocument> kept;
    std::size_t excluded = 0;
    for (auto& doc : load.documents) {
      corpus::CorpusDocument processed = corpus::preprocess(std::move(doc), preprocess_config);
      if (processed.empty_flagged) {
        err << "warning: document '" << processed.id << "' is empty after preprocessing\n";
        ++excluded;
        continue;
      }
      kept.push_back(std::move(processed));
    }
    if (kept.empty()) {
      err << "error: every document was empty after preprocessing\n";
      return kExitInput;
    }

    std::set<std::string> vocabulary;
    for (const auto& doc : kept) vocabulary.insert(doc.tokens.begin(), doc.tokens.end());

    corpus::write_tokens_jsonl_file(options.out_path, kept);
    out << "documents: " << kept.size() << " (excluded " << excluded << " empty)\n";
    out << "vocabulary: " << vocabulary.size() << "\n";
    out << "output: " << options.out_path << "\n";
    return kExitOk;
  });
}

int cmd_embed(const EmbedOptions& options, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    PipelineConfig config = load_config(options.config_path);
    if (options.n) config.n = *options.n;
    if (options.d) config.d = *options.d;
    if (options.k) config.k = *options.k;
    if (options.min_df) config.min_df = *options.min_df;
    if (options.seed) config.seed = *options.seed;

    std::vector<corpus::CorpusDocument> docs =
        corpus::read_tokens_jsonl_file(options.tokens_path);
    if (docs.empty())
      throw InvalidInputError("no documents in " + options.tokens_path);

    std::vector<std::pair<std::string, corpus::NgramCounts>> per_doc;
    per_doc.reserve(docs.size());
    for (const auto& doc : docs)
      per_doc.emplace_back(doc.id, corpus::extract_ngrams(doc.tokens, config.n));

    corpus::TermDocumentMatrix matrix =
        corpus::build_term_document_matrix(per_doc, config.min_df);
    if (matrix.terms.empty())
      throw InvalidInputError("no terms left after the min_df=" +
                              std::to_string(config.min_df) + " filter");

    corpus::TfidfSelection selection = corpus::tfidf_and_select(matrix, config.k);
    if (selection.kept_all && config.k > selection.matrix.terms.size())
      err << "warning: keyterm budget k=" << config.k << " exceeds the vocabulary of "
          << selection.matrix.terms.size() << " terms; keeping all\n";

    corpus::EmbeddingMatrix embeddings =
        corpus::truncated_svd(selection.matrix, config.d, options.transpose);
    corpus::write_numeric_csv_file(options.out_path,
                                   corpus::embedding_to_table(embeddings));

    nlohmann::ordered_json meta;
    meta["schema_version"] = 1;
    meta["language"] = config.language;
    meta["n"] = config.n;
    meta["d"] = config.d;
    meta["k"] = config.k;
    meta["min_df"] = config.min_df;
    meta["seed"] = config.seed;
    meta["documents"] = embeddings.docs.size();
    meta["terms"] = selection.matrix.terms.size();
    meta["singular_values"] = embeddings.singular_values;
    atomic_write_file(options.out_path + ".meta.json", meta.dump(2) + "\n");

    if (options.matrix_out)
      corpus::write_coo_csv_file(*options.matrix_out, selection.matrix);

    out << "embedded rows: " << embeddings.docs.size() << "\n";
    out << "terms: " << selection.matrix.terms.size() << "\n";
    out << "embedding dims: " << embeddings.dims << "\n";
    out << "output: " << options.out_path << "\n";
    return kExitOk;
  });
}

int cmd_context(const ContextOptions& options, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    corpus::NumericTable table = corpus::read_numeric_csv_file(options.in_path);
    if (options.repr == "binary") {
      FormalContext context = corpus::binarize_table(table);
      if (options.format == "cxt")
        write_cxt_file(options.out_path, context);
      else if (options.format == "csv")
        write_context_csv_file(options.out_path, context);
      else
        throw InvalidInputError("unknown context format: " + options.format);
      out << "context: " << context.object_count() << " objects x "
          << context.attribute_count() << " attributes\n";
    } else if (options.repr == "interval") {
      // Canonical numeric CSV; consumed by `dim` as an interval structure.
      corpus::write_numeric_csv_file(options.out_path, table);
      out << "pattern structure: " << table.row_names.size() << " objects x "
          << table.column_names.size() << " components\n";
    } else {
      throw InvalidInputError("unknown representation: " + options.repr);
    }
    out << "output: " << options.out_path << "\n";
    return kExitOk;
  });
}

int cmd_dim(const DimOptions& options, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    DiameterMode mode = diameter_mode_from_string(options.mode);
    std::size_t threads = options.threads ? options.threads : configured_thread_count();
    std::size_t cap = options.max_concepts ? options.max_concepts : kDefaultConceptLimit;

    std::string extension = fs::path(options.in_path).extension().string();
    DimensionResult result;
    if (extension == ".cxt") {
      FormalContext context = read_cxt_file(options.in_path);
      DiameterProfile profile =
          diameter_profile(context, options.ell, mode, threads, cap);
      result = intrinsic_dimension(std::move(profile));
      result.source.measure_type = "cardinality";
      result.source.d = options.d ? *options.d
                                  : static_cast<int>(context.attribute_count());
    } else if (extension == ".csv") {
      IntervalPatternStructure ps =
          corpus::pattern_structure_from_table(corpus::read_numeric_csv_file(options.in_path));
      MeasureSpec spec;
      spec.theta = options.theta;
      DiameterProfile profile =
          diameter_profile(ps, spec, options.ell, mode, threads, cap);
      result = intrinsic_dimension(std::move(profile));
      result.source.measure_type = "interval";
      result.source.theta = options.theta;
      result.source.d = options.d ? *options.d : static_cast<int>(ps.component_count());
    } else {
      throw InvalidInputError("dim expects a .cxt context or a .csv pattern structure, got: " +
                              options.in_path);
    }
    result.source.input = options.in_path;
    result.source.label = options.label ? *options.label : path_stem(options.in_path);
    result.source.n = options.n ? *options.n : 0;

    write_dimension_result_file(options.out_path, result);
    if (result.infinite)
      out << "Dim = inf (zero trapezoid sum over the grid)\n";
    else
      out << "Dim = " << double_to_string(result.dim) << "\n";
    out << "output: " << options.out_path << "\n";
    return kExitOk;
  });
}

int cmd_report(const ReportOptions& options, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    if (options.result_paths.empty())
      throw InvalidInputError("report needs at least one result file");

    struct Row {
      std::string label;
      int n;
      int d;
      double dim;
      bool infinite;
    };
    std::vector<Row> rows;
    for (const std::string& path : options.result_paths) {
      ResultFileData data = read_dimension_result_file(path);
      rows.push_back({data.label, data.n, data.d, data.dim, data.infinite});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
      if (a.label != b.label) return a.label < b.label;
      if (a.n != b.n) return a.n < b.n;
      return a.d < b.d;
    });
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const Row& a = rows[i - 1];
      const Row& b = rows[i];
      if (a.label == b.label && a.n == b.n && a.d == b.d)
        throw InvalidInputError("inconsistent results: duplicate (label, n, d) = (" + a.label +
                                ", " + std::to_string(a.n) + ", " + std::to_string(a.d) + ")");
    }

    struct Aggregate {
      double sum = 0.0;
      std::size_t count = 0;
      bool infinite = false;
    };
    std::map<std::pair<std::string, int>, Aggregate> aggregates;
    for (const Row& r : rows) {
      Aggregate& agg = aggregates[{r.label, r.n}];
      agg.sum += r.infinite ? 0.0 : r.dim;
      agg.infinite = agg.infinite || r.infinite;
      ++agg.count;
    }

    auto dim_text = [](double dim, bool infinite) {
      return infinite ? std::string("inf") : double_to_string(dim);
    };

    out << "label  n  d  dim\n";
    for (const Row& r : rows)
      out << r.label << "  " << r.n << "  " << r.d << "  " << dim_text(r.dim, r.infinite)
          << "\n";
    std::string csv = "schema_version,kind,label,n,d,dim,dim_rounded\n";
    for (const Row& r : rows)
      csv += "1,row," + r.label + "," + std::to_string(r.n) + "," + std::to_string(r.d) + "," +
             dim_text(r.dim, r.infinite) + ",\n";
    for (const auto& [key, agg] : aggregates) {
      double mean = agg.sum / static_cast<double>(agg.count);
      std::string mean_text = dim_text(mean, agg.infinite);
      std::string rounded =
          agg.infinite ? "inf" : std::to_string(round_half_up(mean));
      out << key.first << "  " << key.second << "  mean(" << agg.count << ")  " << mean_text
          << "  ~ " << rounded << "\n";
      csv += "1,aggregate," + key.first + "," + std::to_string(key.second) + ",," + mean_text +
             "," + rounded + "\n";
    }
    if (options.out_csv) {
      atomic_write_file(*options.out_csv, csv);
      out << "output: " << *options.out_csv << "\n";
    }
    return kExitOk;
  });
}

}  // namespace conceptdim::cli
