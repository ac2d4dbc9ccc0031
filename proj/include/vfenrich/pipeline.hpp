#ifndef VFENRICH_PIPELINE_HPP
#define VFENRICH_PIPELINE_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vfenrich/chunker.hpp"
#include "vfenrich/enrich.hpp"
#include "vfenrich/lexicon.hpp"
#include "vfenrich/matcher.hpp"
#include "vfenrich/text.hpp"

namespace vfe {

enum class InputMode { raw, pretagged };
enum class OutputFormat { json, text, tsv };

std::string_view to_string(OutputFormat f);

struct RunConfig {
  std::filesystem::path lexicon_path;
  std::vector<std::filesystem::path> corpus_paths;
  /// Empty means every lexicon verb with enough occurrences.
  std::vector<std::string> target_verbs;
  std::size_t scope_window = 1;
  bool adjunct_filter = true;
  std::size_t min_evidence = 1;
  InputMode input_mode = InputMode::raw;
  OutputFormat output_format = OutputFormat::json;
  std::optional<std::filesystem::path> grammar_path;
  std::optional<std::filesystem::path> ne_config_path;
  std::optional<std::filesystem::path> out_dir;
  std::size_t jobs = 1;

  /// Throws ContractViolation on a zero window or an empty corpus list.
  void validate() const;
};

struct Resources {
  Lexicon lexicon;
  Grammar grammar = Grammar::defaults();
  CaseTables tables = CaseTables::defaults();
  NeConfig ne = NeConfig::defaults();

  static Resources load(const RunConfig& cfg);
};

/// Corpus files in processing order. Directories are walked recursively;
/// raw mode takes *.txt, pretagged mode *.tsv. Explicit files are always taken.
/// Document ids are paths relative to the argument they came from.
struct CorpusFile {
  std::filesystem::path path;
  std::string id;
};
std::vector<CorpusFile> list_corpus(const std::vector<std::filesystem::path>& paths,
                                    InputMode mode);

struct Corpus {
  std::vector<Sentence> sentences;
  std::vector<ChartResult> charts;  // parallel to sentences
  std::vector<std::string> warnings;
};

/// Preprocesses and chunks every document, up to cfg.jobs at a time. The
/// result does not depend on the job count.
Corpus prepare_corpus(const RunConfig& cfg, const Resources& res);

struct VerbRun {
  EnrichedFrame frame;
  std::vector<OccurrenceMatch> matches;  // for the chosen pattern
};

/// Matches every frame of the verb and reports the one matching the most
/// occurrences (earlier frames win ties).
VerbRun enrich_verb(std::string_view verb, const Corpus& corpus, const Resources& res,
                    const RunConfig& cfg);

/// Target verbs in output order.
std::vector<std::string> select_verbs(const RunConfig& cfg, const Corpus& corpus,
                                      const Resources& res);

// Rendering
nlohmann::ordered_json report_json(const EnrichedFrame& f, const Lexicon& lex);
void write_report_text(std::ostream& out, const EnrichedFrame& f, const Lexicon& lex);
void write_assignments_tsv(std::ostream& out, const VerbRun& run, bool header = true);
void write_chunks_tsv(std::ostream& out, const Corpus& corpus, bool header = true);
void write_lexinfo(std::ostream& out, std::string_view lemma, const Lexicon& lex);

}  // namespace vfe

#endif  // VFENRICH_PIPELINE_HPP
