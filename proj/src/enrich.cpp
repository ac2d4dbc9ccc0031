#include "vfenrich/enrich.hpp"

#include <algorithm>
#include <set>

#include "closed_class.hpp"
#include "strings.hpp"

namespace vfe {

std::size_t PrepositionStats::total() const {
  std::size_t n = 0;
  for (const auto& [p, c] : counts) n += c;
  return n;
}

void PrepositionStats::merge(const PrepositionStats& other) {
  if (verb_lemma.empty()) verb_lemma = other.verb_lemma;
  for (const auto& [p, c] : other.counts) counts[p] += c;
  for (const auto& [p, cases] : other.case_counts)
    for (const auto& [c, n] : cases) case_counts[p][c] += n;
  total_occurrences += other.total_occurrences;
}

AdjunctVerdict classify_adjunct(const Chunk& pp, const FramePattern& pattern, const Lexicon& lex) {
  const HeadClass h = classify_head(pp, lex);
  AdjunctVerdict v;
  v.resolved = h.resolved;
  v.category = h.category;
  if (!h.resolved) return v;
  const bool local = h.has_label("location");
  const bool temporal = h.has_label("time");
  v.adjunct = (local && !pattern.has_code("BL")) || (temporal && !pattern.has_code("BT"));
  return v;
}

bool is_adjunct_pp(const Chunk& pp, const FramePattern& pattern, const Lexicon& lex) {
  return classify_adjunct(pp, pattern, lex).adjunct;
}

PrepositionStats count_prepositions(std::span<const CandidateAssignment> assignments,
                                    const FramePattern& pattern, const Lexicon& lex, bool filter,
                                    std::vector<std::string>* warnings) {
  PrepositionStats stats;
  // (sentence id, occurrence) -> PPs keyed by the preposition's token index
  std::map<std::pair<std::string, Occurrence>, std::map<std::size_t, const Chunk*>> seen;
  for (const auto& a : assignments) {
    if (stats.verb_lemma.empty()) stats.verb_lemma = a.verb_lemma;
    auto& pps = seen[{a.sentence_id, a.occurrence}];
    for (const auto& c : a.in_scope_pps) pps.emplace(c.span.begin, &c);
  }
  stats.total_occurrences = seen.size();
  for (const auto& [key, pps] : seen) {
    for (const auto& [begin, pp] : pps) {
      if (!pp->preposition) continue;
      const AdjunctVerdict v = classify_adjunct(*pp, pattern, lex);
      if (!v.resolved && warnings)
        warnings->push_back("unresolved PP head '" + pp->head_lemma + "' in " + key.first +
                            ", kept");
      if (filter && v.adjunct) continue;
      ++stats.counts[*pp->preposition];
      for (Case c : pp->case_set.members()) ++stats.case_counts[*pp->preposition][c];
    }
  }
  return stats;
}

std::optional<DominantPreposition> select_dominant_preposition(const PrepositionStats& stats,
                                                               const CaseTables& tables) {
  if (stats.counts.empty()) return std::nullopt;
  std::size_t best = 0;
  for (const auto& [p, c] : stats.counts) best = std::max(best, c);
  std::vector<std::string> top;
  for (const auto& [p, c] : stats.counts)
    if (c == best) top.push_back(p);  // map order is lexicographic
  DominantPreposition d;
  d.preposition = top.front();
  d.count = best;
  if (top.size() > 1) d.ties = top;

  const CaseSet governed = tables.governed(d.preposition);
  const auto members = governed.members();
  if (members.size() == 1) {
    d.case_ = members.front();
    return d;
  }
  std::optional<Case> pick;
  std::size_t pick_n = 0;
  auto it = stats.case_counts.find(d.preposition);
  for (Case c : members) {
    std::size_t n = 0;
    if (it != stats.case_counts.end()) {
      auto jt = it->second.find(c);
      if (jt != it->second.end()) n = jt->second;
    }
    if (!pick || n > pick_n) {
      pick = c;
      pick_n = n;
    }
  }
  d.case_ = pick.value_or(Case::dative);
  return d;
}

std::optional<FillerObservation> classify_filler(const Binding& binding, std::size_t position,
                                                 const Lexicon& lex) {
  FillerObservation o;
  o.element_position = position;
  if (const auto* c = std::get_if<ChunkRef>(&binding)) {
    const HeadClass h = classify_head(c->chunk, lex);
    o.surface = c->chunk.surface;
    o.kind = h.kind;
    o.ne = h.ne;
    o.synset = h.synset;
    o.anchor = h.synset ? h.synset : h.designated;
    o.category = h.category;
    return o;
  }
  if (const auto* t = std::get_if<TokenRef>(&binding)) {
    o.surface = t->surface;
    const std::string lower = detail::to_lower(t->surface);
    if (detail::temporal_adverbs().count(lower)) o.category = "time";
    else if (detail::local_adverbs().count(lower)) o.category = "location";
    if (o.category != kUnknownCategory) o.anchor = lex.designated_synset(o.category);
    return o;
  }
  return std::nullopt;
}

std::size_t SemanticProfile::observations() const {
  std::size_t n = 0;
  for (const auto& [c, k] : per_category) n += k;
  return n;
}

SemanticProfile generalize_categories(std::span<const FillerObservation> obs, const Lexicon& lex) {
  SemanticProfile p;
  std::set<std::string> anchors;
  for (const auto& o : obs) {
    ++p.per_category[o.category];
    if (o.anchor && lex.contains(*o.anchor)) anchors.insert(*o.anchor);
  }
  if (anchors.size() >= 2) {
    std::vector<std::string> ids(anchors.begin(), anchors.end());
    p.generalization = lex.lowest_common_hypernym(ids);
  }
  return p;
}

namespace {

const ChunkRef* bound_pp(const CandidateAssignment& a, std::size_t k) {
  const auto* c = std::get_if<ChunkRef>(&a.bindings[k]);
  return c && c->chunk.kind == ChunkKind::pp ? c : nullptr;
}

}  // namespace

std::vector<std::vector<FillerObservation>> collect_fillers(
    std::span<const OccurrenceMatch> matches, const FramePattern& pattern, const Lexicon& lex,
    const std::optional<std::string>& preposition, bool filter) {
  std::vector<std::vector<FillerObservation>> out(pattern.elements.size());
  for (const auto& m : matches) {
    if (m.assignments.empty()) continue;
    for (std::size_t k = 0; k < pattern.elements.size(); ++k) {
      const CandidateAssignment* chosen = &m.assignments.front();
      if (pattern.elements[k].is_pp()) {
        chosen = nullptr;
        if (!preposition) continue;
        for (const auto& a : m.assignments) {
          const ChunkRef* c = bound_pp(a, k);
          if (!c || c->chunk.preposition != preposition) continue;
          if (filter && is_adjunct_pp(c->chunk, pattern, lex)) continue;
          chosen = &a;
          break;
        }
        if (!chosen) continue;
      }
      if (auto o = classify_filler(chosen->bindings[k], k, lex)) {
        o->sentence_id = m.sentence_id;
        out[k].push_back(std::move(*o));
      }
    }
  }
  return out;
}

EnrichedFrame build_enriched_frame(std::string_view verb, const FramePattern& pattern,
                                   const PrepositionStats& stats,
                                   const std::optional<DominantPreposition>& dominant,
                                   std::span<const std::vector<FillerObservation>> fillers,
                                   std::size_t occurrences, const Lexicon& lex,
                                   const EnrichOptions& options) {
  EnrichedFrame f;
  f.verb_lemma = std::string(verb);
  f.pattern = pattern;
  f.occurrences_examined = occurrences;
  f.stats = stats;
  f.dominant = dominant;
  if (dominant && !dominant->ties.empty())
    f.warnings.push_back("preposition tie between " + detail::join(dominant->ties, ", ") +
                         ", picked " + dominant->preposition);
  for (std::size_t k = 0; k < pattern.elements.size(); ++k) {
    const ComplementCode& code = pattern.elements[k];
    EnrichedElement e;
    e.code = code.code;
    e.phrase_form = std::string(to_string(code.phrase_kind));
    std::span<const FillerObservation> obs;
    if (k < fillers.size()) obs = fillers[k];
    e.evidence = obs.size();
    e.profile = generalize_categories(obs, lex);
    for (const auto& o : obs) {
      e.fillers.push_back(o.surface);
      if (o.category == kUnknownCategory)
        f.warnings.push_back("filler '" + o.surface + "' of " + code.code + " in " +
                             o.sentence_id + " has unknown category");
    }
    if (code.is_noun_phrase()) {
      e.case_ = code.required_case;
    } else if (code.is_pp() && e.evidence > 0 && dominant) {
      e.preposition = dominant->preposition;
      e.case_ = dominant->case_;
    }
    e.sufficient = e.evidence >= std::max<std::size_t>(options.min_evidence, 1);
    f.elements.push_back(std::move(e));
  }
  return f;
}

EnrichedFrame enrich_pattern(std::string_view verb, const FramePattern& pattern,
                             std::span<const OccurrenceMatch> matches, std::size_t occurrences,
                             const Lexicon& lex, const CaseTables& tables,
                             const EnrichOptions& options) {
  std::vector<CandidateAssignment> all;
  std::size_t matched = 0;
  for (const auto& m : matches) {
    if (!m.assignments.empty()) ++matched;
    all.insert(all.end(), m.assignments.begin(), m.assignments.end());
  }
  std::vector<std::string> warnings;
  PrepositionStats stats = count_prepositions(all, pattern, lex, options.adjunct_filter, &warnings);
  stats.verb_lemma = std::string(verb);
  auto dominant = select_dominant_preposition(stats, tables);
  std::optional<std::string> prep;
  if (dominant) prep = dominant->preposition;
  auto fillers = collect_fillers(matches, pattern, lex, prep, options.adjunct_filter);
  EnrichedFrame f =
      build_enriched_frame(verb, pattern, stats, dominant, fillers, occurrences, lex, options);
  f.occurrences_matched = matched;
  f.warnings.insert(f.warnings.begin(), warnings.begin(), warnings.end());
  return f;
}

}  // namespace vfe
