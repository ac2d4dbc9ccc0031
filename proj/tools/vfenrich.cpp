// vfenrich: enrich verb frames from a chunked corpus.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "vfenrich/error.hpp"
#include "vfenrich/pipeline.hpp"

namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInput = 2 };

void add_common(CLI::App& sub, vfe::RunConfig& cfg) {
  sub.add_option("--lexicon", cfg.lexicon_path, "Lexicon JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  sub.add_option("--corpus", cfg.corpus_paths, "Corpus file or directory (repeatable)")
      ->required()
      ->check(CLI::ExistingPath);
  sub.add_flag("--pretagged", "Corpus is in surface/tag/lemma TSV form");
  sub.add_option("--grammar", cfg.grammar_path, "Chunk grammar file")->check(CLI::ExistingFile);
  sub.add_option("--ne-config", cfg.ne_config_path, "Named-entity gazetteer JSON")
      ->check(CLI::ExistingFile);
  sub.add_option("--out", cfg.out_dir, "Write output files into DIR instead of stdout");
  sub.add_option("--jobs", cfg.jobs, "Documents processed in parallel")
      ->check(CLI::PositiveNumber);
}

std::ostream* open_out(const vfe::RunConfig& cfg, const std::string& name, std::ofstream& file) {
  if (!cfg.out_dir) return &std::cout;
  fs::create_directories(*cfg.out_dir);
  file.open(*cfg.out_dir / name, std::ios::binary);
  if (!file) throw vfe::LookupError("cannot write " + (*cfg.out_dir / name).string());
  return &file;
}

int run_enrich(vfe::RunConfig& cfg) {
  cfg.validate();
  const auto res = vfe::Resources::load(cfg);
  const auto corpus = vfe::prepare_corpus(cfg, res);
  for (const auto& w : corpus.warnings) std::cerr << "warning: " << w << '\n';
  static const std::map<vfe::OutputFormat, std::string> ext{
      {vfe::OutputFormat::json, ".json"}, {vfe::OutputFormat::text, ".txt"},
      {vfe::OutputFormat::tsv, ".tsv"}};
  bool first = true;
  for (const auto& verb : vfe::select_verbs(cfg, corpus, res)) {
    const auto run = vfe::enrich_verb(verb, corpus, res, cfg);
    for (const auto& w : run.frame.warnings) std::cerr << "warning: " << verb << ": " << w << '\n';
    std::ofstream file;
    std::ostream& out = *open_out(cfg, verb + ext.at(cfg.output_format), file);
    switch (cfg.output_format) {
      case vfe::OutputFormat::json:
        out << vfe::report_json(run.frame, res.lexicon).dump(2) << '\n';
        break;
      case vfe::OutputFormat::text:
        if (!first && !cfg.out_dir) out << '\n';
        vfe::write_report_text(out, run.frame, res.lexicon);
        break;
      case vfe::OutputFormat::tsv:
        vfe::write_assignments_tsv(out, run, first || cfg.out_dir.has_value());
        break;
    }
    first = false;
  }
  return kOk;
}

int run_chunk(vfe::RunConfig& cfg) {
  cfg.validate();
  const auto res = vfe::Resources::load(cfg);
  const auto corpus = vfe::prepare_corpus(cfg, res);
  for (const auto& w : corpus.warnings) std::cerr << "warning: " << w << '\n';
  std::ofstream file;
  vfe::write_chunks_tsv(*open_out(cfg, "chunks.tsv", file), corpus);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enrich verb subcategorization frames with prepositions, case and filler categories"};
  app.require_subcommand(1);
  vfe::RunConfig cfg;
  std::string format = "json";
  std::string lemma;

  auto* enrich = app.add_subcommand("enrich", "Build enriched frames for target verbs");
  add_common(*enrich, cfg);
  enrich->add_option("--verb", cfg.target_verbs,
                     "Target verb lemma (repeatable; default: every verb found in the corpus)");
  enrich->add_option("--scope-window", cfg.scope_window,
                     "Chunks on each side of the verb searched for PPs")
      ->check(CLI::PositiveNumber);
  enrich->add_flag("--no-adjunct-filter", "Count local and temporal PPs too");
  enrich->add_option("--min-evidence", cfg.min_evidence,
                     "Fillers needed before an element counts as enriched");
  enrich->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text", "tsv"}));

  auto* chunk = app.add_subcommand("chunk", "Dump the chunker output as TSV");
  add_common(*chunk, cfg);

  auto* lexinfo = app.add_subcommand("lexinfo", "Show synsets, hypernym path and frames of a lemma");
  lexinfo->add_option("--lexicon", cfg.lexicon_path, "Lexicon JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  lexinfo->add_option("lemma", lemma, "Lemma to look up")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  for (auto* sub : {enrich, chunk}) {
    if (!sub->parsed()) continue;
    if (sub->count("--pretagged")) cfg.input_mode = vfe::InputMode::pretagged;
  }
  if (enrich->count("--no-adjunct-filter")) cfg.adjunct_filter = false;
  if (format == "text") cfg.output_format = vfe::OutputFormat::text;
  else if (format == "tsv") cfg.output_format = vfe::OutputFormat::tsv;

  try {
    if (enrich->parsed()) return run_enrich(cfg);
    if (chunk->parsed()) return run_chunk(cfg);
    const auto lex = vfe::Lexicon::load_file(cfg.lexicon_path);
    try {
      vfe::write_lexinfo(std::cout, lemma, lex);
    } catch (const vfe::LookupError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kUsage;
    }
    return kOk;
  } catch (const vfe::ContractViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
}
