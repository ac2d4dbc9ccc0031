#include <algorithm>
#include <ostream>
#include <sstream>

#include "strings.hpp"
#include "vfenrich/error.hpp"
#include "vfenrich/pipeline.hpp"

namespace vfe {

using nlohmann::ordered_json;

namespace {

// Summary category of a profile: the generalization's, else the most
// frequent one (smallest name on ties).
std::optional<std::string> profile_category(const SemanticProfile& p, const Lexicon& lex) {
  if (p.generalization) return lex.synset(*p.generalization).category;
  std::optional<std::string> best;
  std::size_t n = 0;
  for (const auto& [c, k] : p.per_category)
    if (k > n) {
      best = c;
      n = k;
    }
  return best;
}

std::string status(const EnrichedElement& e) {
  return e.sufficient ? "ok" : "insufficient-evidence";
}

std::string categories_text(const SemanticProfile& p) {
  std::vector<std::string> parts;
  for (const auto& [c, k] : p.per_category) parts.push_back(c + "=" + std::to_string(k));
  return parts.empty() ? "-" : detail::join(parts, ",");
}

std::string binding_text(const Binding& b) {
  if (const auto* c = std::get_if<ChunkRef>(&b)) return c->chunk.surface;
  if (const auto* t = std::get_if<TokenRef>(&b)) return t->surface;
  return "-";
}

void write_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  auto display = [](const std::string& s) {
    // UTF-8 continuation bytes take no column
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
  };
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], display(r[i]));
  }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - display(r[i]) + 2, ' ');
    }
    out << line << '\n';
  }
}

}  // namespace

ordered_json report_json(const EnrichedFrame& f, const Lexicon& lex) {
  ordered_json j;
  j["verb"] = f.verb_lemma;
  j["pattern"] = f.pattern ? ordered_json(f.pattern->raw) : ordered_json(nullptr);
  j["frames_considered"] = f.frames_considered;
  j["occurrences_examined"] = f.occurrences_examined;
  j["occurrences_matched"] = f.occurrences_matched;
  ordered_json elements = ordered_json::array();
  for (const auto& e : f.elements) {
    ordered_json x;
    x["code"] = e.code;
    x["phrase_form"] = e.phrase_form;
    if (e.preposition) x["preposition"] = *e.preposition;
    if (e.case_) x["case"] = std::string(to_string(*e.case_));
    ordered_json cats = ordered_json::object();
    for (const auto& [c, k] : e.profile.per_category) cats[c] = k;
    x["categories"] = cats;
    if (auto c = profile_category(e.profile, lex)) x["category"] = *c;
    if (e.profile.generalization) {
      const Synset& s = lex.synset(*e.profile.generalization);
      x["generalization"] = {{"synset", s.id}, {"lemma", s.lemmas.front()}, {"category", s.category}};
    }
    x["evidence"] = e.evidence;
    x["status"] = status(e);
    x["fillers"] = e.fillers;
    elements.push_back(std::move(x));
  }
  j["elements"] = elements;
  ordered_json counts = ordered_json::object();
  for (const auto& [p, c] : f.stats.counts) counts[p] = c;
  j["preposition_counts"] = counts;
  if (f.dominant) {
    j["dominant_preposition"] = {{"preposition", f.dominant->preposition},
                                 {"case", std::string(to_string(f.dominant->case_))},
                                 {"count", f.dominant->count},
                                 {"ties", f.dominant->ties}};
  } else {
    j["dominant_preposition"] = nullptr;
  }
  j["warnings"] = f.warnings;
  return j;
}

void write_report_text(std::ostream& out, const EnrichedFrame& f, const Lexicon& lex) {
  write_table(out, {
                       {"verb", f.verb_lemma},
                       {"pattern", f.pattern ? f.pattern->raw : "-"},
                       {"frames", f.frames_considered.empty() ? "-" : detail::join(f.frames_considered, " ")},
                       {"occurrences", std::to_string(f.occurrences_examined) + " (" +
                                           std::to_string(f.occurrences_matched) + " matched)"},
                   });
  out << '\n';
  std::vector<std::vector<std::string>> rows{
      {"code", "form", "prep", "case", "evidence", "status", "category", "generalization", "categories"}};
  for (const auto& e : f.elements) {
    auto cat = profile_category(e.profile, lex);
    rows.push_back({e.code, e.phrase_form, e.preposition.value_or("-"),
                    e.case_ ? std::string(to_string(*e.case_)) : "-", std::to_string(e.evidence),
                    status(e), cat.value_or("-"), e.profile.generalization.value_or("-"),
                    categories_text(e.profile)});
  }
  write_table(out, rows);
  out << '\n';
  std::vector<std::string> counts;
  for (const auto& [p, c] : f.stats.counts) counts.push_back(p + "=" + std::to_string(c));
  out << "prepositions  " << (counts.empty() ? "-" : detail::join(counts, " ")) << '\n';
  if (f.dominant) {
    out << "dominant      " << f.dominant->preposition << " (" << to_string(f.dominant->case_)
        << ", " << f.dominant->count << ")";
    if (!f.dominant->ties.empty()) out << " ties: " << detail::join(f.dominant->ties, " ");
    out << '\n';
  }
  for (const auto& e : f.elements)
    if (!e.fillers.empty()) out << e.code << " fillers: " << detail::join(e.fillers, " | ") << '\n';
  for (const auto& w : f.warnings) out << "warning: " << w << '\n';
}

void write_assignments_tsv(std::ostream& out, const VerbRun& run, bool header) {
  if (header) out << "verb\tsentence\ttoken\tcovering\tpattern\tbindings\tin_scope\tborrowed\n";
  for (const auto& m : run.matches) {
    for (const auto& a : m.assignments) {
      std::vector<std::string> binds;
      for (std::size_t k = 0; k < a.bindings.size(); ++k)
        binds.push_back(a.pattern.elements[k].code + "=" + binding_text(a.bindings[k]));
      std::vector<std::string> pps;
      for (const auto& c : a.in_scope_pps) pps.push_back(c.surface);
      out << a.verb_lemma << '\t' << a.sentence_id << '\t' << a.occurrence.token << '\t'
          << a.covering_id << '\t' << a.pattern.raw << '\t' << detail::join(binds, " | ") << '\t'
          << (pps.empty() ? "-" : detail::join(pps, " | ")) << '\t'
          << (a.borrowed_subject ? "yes" : "no") << '\n';
    }
  }
}

void write_chunks_tsv(std::ostream& out, const Corpus& corpus, bool header) {
  if (header) out << "sentence\tcoverings\tkind\tbegin\tend\tsurface\tcases\tpreposition\thead\n";
  for (std::size_t i = 0; i < corpus.sentences.size(); ++i) {
    const Sentence& s = corpus.sentences[i];
    const ChartResult& chart = corpus.charts[i];
    for (const auto& c : chart.coverings.front().chunks) {
      out << s.id() << '\t' << chart.coverings.size() << '\t' << to_string(c.kind) << '\t'
          << c.span.begin << '\t' << c.span.end << '\t' << c.surface << '\t'
          << c.case_set.to_string() << '\t' << c.preposition.value_or("-") << '\t'
          << c.head_lemma << '\n';
    }
  }
}

void write_lexinfo(std::ostream& out, std::string_view lemma, const Lexicon& lex) {
  bool found = false;
  for (PartOfSpeech pos : {PartOfSpeech::noun, PartOfSpeech::verb, PartOfSpeech::adjective}) {
    for (const Synset* s : lex.lookup_synsets(lemma, pos)) {
      found = true;
      out << "synset    " << s->id << " (" << to_string(s->pos) << ")\n";
      out << "lemmas    " << detail::join(s->lemmas, ", ") << '\n';
      out << "category  " << s->category << '\n';
      std::vector<std::string> path;
      for (const auto& id : lex.hypernym_path(s->id)) {
        const Synset& h = lex.synset(id);
        path.push_back(h.label ? id + " [" + *h.label + "]" : id);
      }
      out << "path      " << detail::join(path, " > ") << "\n\n";
    }
  }
  const VerbEntry* v = lex.verb(lemma);
  if (!v) {
    if (auto l = lex.verb_for_form(lemma)) v = lex.verb(*l);
  }
  if (v) {
    found = true;
    out << "verb      " << v->lemma << '\n';
    out << "forms     " << detail::join(v->forms, ", ") << '\n';
    out << "frames    " << detail::join(v->frames, " ") << '\n';
  }
  if (!found) throw LookupError("unknown lemma: " + std::string(lemma));
}

}  // namespace vfe
