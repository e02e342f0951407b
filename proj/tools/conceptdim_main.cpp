#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"

namespace cli = conceptdim::cli;

int main(int argc, char** argv) {
  CLI::App app{"conceptdim: observed diameter and intrinsic dimension of formal contexts "
               "and interval pattern structures"};
  app.footer("Environment: CONCEPTDIM_THREADS caps per-grid-point parallelism.");
  app.require_subcommand(1);

  cli::IngestOptions ingest;
  CLI::App* ingest_cmd =
      app.add_subcommand("ingest", "Preprocess a text corpus into token lists");
  ingest_cmd->add_option("corpus", ingest.corpus_path,
                         "Corpus directory of .txt files or a .jsonl file")
      ->required();
  ingest_cmd->add_option("--out", ingest.out_path, "Output tokens JSONL path")->required();
  ingest_cmd->add_option("--config", ingest.config_path, "Pipeline config file");
  ingest_cmd->add_option("--language", ingest.language,
                         "Corpus language (english, russian, bengali, none)");
  ingest_cmd->add_option("--stopwords", ingest.stopword_path,
                         "Stop-word list, one token per line");

  cli::EmbedOptions embed;
  CLI::App* embed_cmd = app.add_subcommand(
      "embed", "Build tf-idf keyterms and SVD document embeddings from tokens");
  embed_cmd->add_option("tokens", embed.tokens_path, "Tokens JSONL from ingest")->required();
  embed_cmd->add_option("--out", embed.out_path, "Output embedding CSV path")->required();
  embed_cmd->add_option("--config", embed.config_path, "Pipeline config file");
  embed_cmd->add_option("--n", embed.n, "n-gram order");
  embed_cmd->add_option("--d", embed.d, "Embedding dimension");
  embed_cmd->add_option("--k", embed.k, "Keyterm budget");
  embed_cmd->add_option("--min-df", embed.min_df, "Minimum document frequency");
  embed_cmd->add_option("--seed", embed.seed, "Seed recorded in the run metadata");
  embed_cmd->add_option("--matrix-out", embed.matrix_out,
                        "Also export the term-document matrix as COO CSV");
  embed_cmd->add_flag("--transpose", embed.transpose,
                      "Embed keyterms instead of documents (flips the object side)");

  cli::ContextOptions context;
  CLI::App* context_cmd = app.add_subcommand(
      "context", "Turn an embedding CSV into a formal context or pattern structure");
  context_cmd->add_option("embeddings", context.in_path, "Embedding CSV from embed")
      ->required();
  context_cmd->add_option("--out", context.out_path, "Output artifact path")->required();
  context_cmd->add_option("--repr", context.repr, "Representation: binary or interval")
      ->check(CLI::IsMember({"binary", "interval"}));
  context_cmd->add_option("--format", context.format, "Binary output format: cxt or csv")
      ->check(CLI::IsMember({"cxt", "csv"}));

  cli::DimOptions dim;
  CLI::App* dim_cmd = app.add_subcommand(
      "dim", "Compute the diameter profile and intrinsic dimension of an artifact");
  dim_cmd->add_option("input", dim.in_path, "A .cxt context or .csv pattern structure")
      ->required();
  dim_cmd->add_option("--out", dim.out_path, "Output result JSON path")->required();
  dim_cmd->add_option("--ell", dim.ell, "Grid resolution (intervals in [0,1])")
      ->check(CLI::PositiveNumber);
  dim_cmd->add_option("--mode", dim.mode, "Diameter computation: exact or search")
      ->check(CLI::IsMember({"exact", "search"}));
  dim_cmd->add_option("--theta", dim.theta, "Interval tightness threshold (interval inputs)");
  dim_cmd->add_option("--label", dim.label, "Corpus/language label stored for reports");
  dim_cmd->add_option("--n", dim.n, "n-gram order stored for reports");
  dim_cmd->add_option("--d", dim.d, "Embedding dimension stored for reports");
  dim_cmd->add_option("--cap", dim.max_concepts, "Concept enumeration bound");

  cli::ReportOptions report;
  CLI::App* report_cmd =
      app.add_subcommand("report", "Aggregate dimension results per (label, n)");
  report_cmd->add_option("results", report.result_paths, "Result JSON files")->required();
  report_cmd->add_option("--out", report.out_csv, "Output CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitInput;
  }

  if (ingest_cmd->parsed()) return cli::cmd_ingest(ingest, std::cout, std::cerr);
  if (embed_cmd->parsed()) return cli::cmd_embed(embed, std::cout, std::cerr);
  if (context_cmd->parsed()) return cli::cmd_context(context, std::cout, std::cerr);
  if (dim_cmd->parsed()) return cli::cmd_dim(dim, std::cout, std::cerr);
  if (report_cmd->parsed()) return cli::cmd_report(report, std::cout, std::cerr);
  return cli::kExitInput;
}
