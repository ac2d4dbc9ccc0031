#include "vfenrich/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "vfenrich/error.hpp"

namespace vfe {

namespace fs = std::filesystem;

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::text: return "text";
    case OutputFormat::tsv: return "tsv";
  }
  return "json";
}

void RunConfig::validate() const {
  if (scope_window == 0) throw ContractViolation("scope window must be at least 1");
  if (corpus_paths.empty()) throw ContractViolation("at least one corpus path is required");
}

Resources Resources::load(const RunConfig& cfg) {
  Resources r;
  r.lexicon = Lexicon::load_file(cfg.lexicon_path);
  if (cfg.grammar_path) r.grammar = Grammar::load_file(*cfg.grammar_path);
  if (cfg.ne_config_path) r.ne = NeConfig::load_file(*cfg.ne_config_path);
  return r;
}

std::vector<CorpusFile> list_corpus(const std::vector<fs::path>& paths, InputMode mode) {
  const std::string ext = mode == InputMode::raw ? ".txt" : ".tsv";
  std::vector<CorpusFile> out;
  for (const auto& p : paths) {
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      std::vector<CorpusFile> found;
      for (const auto& e : fs::recursive_directory_iterator(p)) {
        if (!e.is_regular_file() || e.path().extension() != ext) continue;
        found.push_back({e.path(), fs::relative(e.path(), p).generic_string()});
      }
      std::sort(found.begin(), found.end(),
                [](const CorpusFile& a, const CorpusFile& b) { return a.id < b.id; });
      out.insert(out.end(), found.begin(), found.end());
    } else if (fs::is_regular_file(p, ec)) {
      out.push_back({p, p.filename().generic_string()});
    } else {
      throw LookupError("corpus path not found: " + p.string());
    }
  }
  return out;
}

namespace {

struct DocumentResult {
  std::vector<Sentence> sentences;
  std::vector<ChartResult> charts;
};

DocumentResult process_document(const CorpusFile& file, const RunConfig& cfg,
                                const Resources& res) {
  std::ifstream in(file.path, std::ios::binary);
  if (!in) throw LookupError("cannot read " + file.path.string());
  DocumentResult d;
  if (cfg.input_mode == InputMode::raw) {
    std::ostringstream buf;
    buf << in.rdbuf();
    d.sentences = preprocess_document(buf.str(), file.id, res.lexicon, res.ne);
  } else {
    d.sentences = preprocess_pretagged(in, file.id, res.lexicon, res.ne);
  }
  for (const auto& s : d.sentences) d.charts.push_back(parse_chunks(s, res.grammar, res.tables));
  return d;
}

template <typename Fn>
void parallel_for(std::size_t n, std::size_t jobs, Fn&& fn) {
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (std::size_t j = 0; j < jobs; ++j)
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  for (auto& w : workers) w.join();
}

}  // namespace

Corpus prepare_corpus(const RunConfig& cfg, const Resources& res) {
  const auto files = list_corpus(cfg.corpus_paths, cfg.input_mode);
  std::vector<DocumentResult> docs(files.size());
  std::vector<std::exception_ptr> errors(files.size());
  parallel_for(files.size(), cfg.jobs, [&](std::size_t i) {
    try {
      docs[i] = process_document(files[i], cfg, res);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  Corpus c;
  for (auto& d : docs) {
    for (std::size_t i = 0; i < d.sentences.size(); ++i) {
      if (d.charts[i].truncated)
        c.warnings.push_back("covering limit reached in " + d.sentences[i].id());
      c.sentences.push_back(std::move(d.sentences[i]));
      c.charts.push_back(std::move(d.charts[i]));
    }
  }
  return c;
}

VerbRun enrich_verb(std::string_view verb, const Corpus& corpus, const Resources& res,
                    const RunConfig& cfg) {
  const Lexicon& lex = res.lexicon;
  EnrichOptions eo{cfg.adjunct_filter, cfg.min_evidence};
  MatchOptions mo;
  mo.window = cfg.scope_window;

  VerbRun run;
  const VerbEntry* entry = lex.verb(verb);
  if (!entry) {
    run.frame.verb_lemma = std::string(verb);
    run.frame.stats.verb_lemma = std::string(verb);
    run.frame.warnings.push_back("verb '" + std::string(verb) + "' is not in the lexicon");
    return run;
  }
  const auto occs = find_verb_occurrences(corpus.sentences, verb, lex);

  std::optional<FramePattern> best;
  std::size_t best_matched = 0;
  for (const auto& raw : entry->frames) {
    const FramePattern pattern = parse_frame(raw);
    std::vector<OccurrenceMatch> matches;
    std::size_t matched = 0;
    for (const auto& o : occs) {
      matches.push_back(match_occurrence(corpus.sentences[o.sentence], corpus.charts[o.sentence],
                                         o, verb, pattern, lex, mo));
      if (!matches.back().assignments.empty()) ++matched;
    }
    if (!best || matched > best_matched) {
      best = pattern;
      best_matched = matched;
      run.matches = std::move(matches);
    }
  }

  run.frame = enrich_pattern(verb, *best, run.matches, occs.size(), lex, res.tables, eo);
  run.frame.frames_considered = entry->frames;
  std::vector<std::string> extra;
  for (const auto& m : run.matches) {
    if (m.assignments.empty())
      extra.push_back("no covering of " + m.sentence_id + " matches " + best->raw);
    if (corpus.charts[m.occurrence.sentence].truncated)
      extra.push_back("covering limit reached in " + m.sentence_id);
  }
  run.frame.warnings.insert(run.frame.warnings.begin(), extra.begin(), extra.end());
  return run;
}

std::vector<std::string> select_verbs(const RunConfig& cfg, const Corpus& corpus,
                                      const Resources& res) {
  std::set<std::string> verbs;
  if (!cfg.target_verbs.empty()) {
    verbs.insert(cfg.target_verbs.begin(), cfg.target_verbs.end());
  } else {
    const std::size_t need = std::max<std::size_t>(1, cfg.min_evidence);
    for (const auto& [lemma, entry] : res.lexicon.verbs())
      if (find_verb_occurrences(corpus.sentences, lemma, res.lexicon).size() >= need)
        verbs.insert(lemma);
  }
  return {verbs.begin(), verbs.end()};
}

}  // namespace vfe
