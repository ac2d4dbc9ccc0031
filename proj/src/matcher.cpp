#include "vfenrich/matcher.hpp"

#include <algorithm>
#include <set>

#include "closed_class.hpp"
#include "strings.hpp"
#include "vfenrich/semantics.hpp"

namespace vfe {

std::vector<Occurrence> find_verb_occurrences(std::span<const Sentence> sentences,
                                              std::string_view lemma, const Lexicon& lex) {
  std::vector<Occurrence> out;
  for (std::size_t si = 0; si < sentences.size(); ++si) {
    const auto& tokens = sentences[si].tokens;
    for (std::size_t ti = 0; ti < tokens.size(); ++ti) {
      const Token& t = tokens[ti];
      if (t.pos != Tag::verb_finite && t.pos != Tag::verb_other) continue;
      std::optional<std::string> verb = t.lemma;
      if (!verb || !lex.verb(*verb)) verb = lex.verb_for_form(t.surface);
      if (verb && *verb == lemma) out.push_back({si, ti});
    }
  }
  return out;
}

std::vector<ClauseSegment> split_clauses(const Sentence& s, std::optional<std::size_t> verb_index,
                                         std::span<const Chunk> chunks) {
  std::vector<ClauseSegment> out;
  auto inside_chunk = [&](std::size_t i) {
    return std::any_of(chunks.begin(), chunks.end(),
                       [&](const Chunk& c) { return c.span.contains(i); });
  };
  std::size_t start = 0;
  bool after_und = false;
  auto close = [&](std::size_t end) {
    if (end > start) {
      ClauseSegment seg{{start, end}, std::nullopt, after_und};
      if (verb_index && seg.span.contains(*verb_index)) seg.verb_index = verb_index;
      out.push_back(seg);
    }
  };
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    const Token& t = s.tokens[i];
    const bool comma = t.pos == Tag::comma;
    const bool und = t.pos == Tag::conjunction && detail::to_lower(t.surface) == "und" &&
                     !inside_chunk(i);
    if (!comma && !und) continue;
    close(i);
    start = i + 1;
    after_und = und;
  }
  close(s.tokens.size());
  return out;
}

std::vector<std::size_t> select_in_scope_pps(const ClauseSegment& seg, const Covering& covering,
                                             std::size_t verb_index, std::size_t window) {
  std::vector<std::size_t> before, after;
  for (std::size_t i = 0; i < covering.chunks.size(); ++i) {
    const Chunk& c = covering.chunks[i];
    if (!seg.span.contains(c.span)) continue;
    if (c.span.end <= verb_index) before.push_back(i);
    else if (c.span.begin > verb_index) after.push_back(i);
  }
  std::reverse(before.begin(), before.end());
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d < window; ++d) {
    for (const auto* side : {&after, &before}) {
      if (d < side->size() && covering.chunks[(*side)[d]].kind == ChunkKind::pp)
        out.push_back((*side)[d]);
    }
  }
  return out;
}

namespace {

struct Option {
  Binding binding;
  std::vector<std::size_t> chunks;  // covering indices consumed
  std::vector<std::size_t> tokens;  // token indices consumed
  bool borrowed = false;
};

bool fits_restriction(SemanticRestriction r, const HeadClass& h) {
  const bool local = h.has_label("location");
  const bool temporal = h.has_label("time");
  switch (r) {
    case SemanticRestriction::local: return local;
    case SemanticRestriction::temporal: return temporal;
    case SemanticRestriction::manner: return !local && !temporal;
    case SemanticRestriction::none: return true;
  }
  return false;
}

bool adverb_fits(SemanticRestriction r, const std::string& lower) {
  const bool local = detail::local_adverbs().count(lower) > 0;
  const bool temporal = detail::temporal_adverbs().count(lower) > 0;
  switch (r) {
    case SemanticRestriction::local: return local;
    case SemanticRestriction::temporal: return temporal;
    case SemanticRestriction::manner: return !local && !temporal;
    case SemanticRestriction::none: return true;
  }
  return false;
}

class Binder {
 public:
  Binder(const FramePattern& pattern, const MatchSite& site, const Covering& covering,
         const Lexicon& lex, const MatchOptions& options)
      : pattern_(pattern), site_(site), s_(*site.sentence), covering_(covering), lex_(lex),
        options_(options) {
    const ClauseSegment& seg = site.segments[site.segment];
    in_scope_ = select_in_scope_pps(seg, covering, site.verb_index, options.window);
    covered_.assign(s_.tokens.size(), false);
    for (const auto& c : covering.chunks)
      for (std::size_t i = c.span.begin; i < c.span.end; ++i) covered_[i] = true;
    for (const auto& e : pattern.elements) options_per_element_.push_back(candidates(e));
  }

  std::vector<CandidateAssignment> run() {
    std::vector<std::size_t> picks;
    walk(0, picks);
    return std::move(results_);
  }

 private:
  std::vector<Option> np_candidates(const ComplementCode& e, const ClauseSegment& seg,
                                    bool borrowed) const {
    std::vector<Option> out;
    for (std::size_t i = 0; i < covering_.chunks.size(); ++i) {
      const Chunk& c = covering_.chunks[i];
      if (c.kind != ChunkKind::np || !seg.span.contains(c.span)) continue;
      if (e.required_case && !c.case_set.contains(*e.required_case)) continue;
      out.push_back({ChunkRef{i, c}, {i}, {}, borrowed});
    }
    // Most specific case marking first, then leftmost.
    std::stable_sort(out.begin(), out.end(), [&](const Option& a, const Option& b) {
      const Chunk& ca = std::get<ChunkRef>(a.binding).chunk;
      const Chunk& cb = std::get<ChunkRef>(b.binding).chunk;
      return ca.case_set.size() < cb.case_set.size();
    });
    return out;
  }

  std::vector<Option> free_tokens(const ClauseSegment& seg, auto&& pred) const {
    std::vector<Option> out;
    for (std::size_t i = seg.span.begin; i < seg.span.end; ++i) {
      if (covered_[i] || i == site_.verb_index) continue;
      if (pred(i)) out.push_back({TokenRef{{i, i + 1}, s_.tokens[i].surface}, {}, {i}, false});
    }
    return out;
  }

  // Pronoun slots take a one-word NP chunk, or the bare token when no
  // chunk covers it.
  std::vector<Option> pronoun_slot(const ClauseSegment& seg, auto&& accept) const {
    std::vector<Option> out;
    for (std::size_t i = 0; i < covering_.chunks.size(); ++i) {
      const Chunk& c = covering_.chunks[i];
      if (c.kind != ChunkKind::np || c.span.size() != 1 || !seg.span.contains(c.span)) continue;
      const Token& t = s_.tokens[c.span.begin];
      if (t.pos == Tag::pronoun && accept(detail::to_lower(t.surface)))
        out.push_back({ChunkRef{i, c}, {i}, {}, false});
    }
    auto bare = free_tokens(seg, [&](std::size_t i) {
      return s_.tokens[i].pos == Tag::pronoun && accept(detail::to_lower(s_.tokens[i].surface));
    });
    out.insert(out.end(), bare.begin(), bare.end());
    return out;
  }

  std::vector<Option> candidates(const ComplementCode& e) const {
    const ClauseSegment& seg = site_.segments[site_.segment];
    std::vector<Option> out;
    switch (e.phrase_kind) {
      case PhraseKind::noun_phrase: {
        out = np_candidates(e, seg, false);
        // A subject shared with the preceding "und"-conjunct.
        if (out.empty() && e.required_case == Case::nominative && seg.after_conjunction &&
            site_.segment > 0)
          out = np_candidates(e, site_.segments[site_.segment - 1], true);
        break;
      }
      case PhraseKind::prepositional_phrase:
        for (std::size_t i : in_scope_) out.push_back({ChunkRef{i, covering_.chunks[i]}, {i}, {}, false});
        break;
      case PhraseKind::adverbial_or_pp: {
        for (std::size_t i : in_scope_) {
          if (fits_restriction(e.restriction, classify_head(covering_.chunks[i], lex_)))
            out.push_back({ChunkRef{i, covering_.chunks[i]}, {i}, {}, false});
        }
        auto adverbs = free_tokens(seg, [&](std::size_t i) {
          return s_.tokens[i].pos == Tag::adverb &&
                 adverb_fits(e.restriction, detail::to_lower(s_.tokens[i].surface));
        });
        std::stable_sort(adverbs.begin(), adverbs.end(), [&](const Option& a, const Option& b) {
          auto dist = [&](const Option& o) {
            std::size_t t = o.tokens.front();
            return t > site_.verb_index ? t - site_.verb_index : site_.verb_index - t;
          };
          return dist(a) < dist(b);
        });
        out.insert(out.end(), adverbs.begin(), adverbs.end());
        break;
      }
      case PhraseKind::reflexive:
        out = pronoun_slot(seg, [](const std::string& w) {
          return detail::reflexive_pronouns().count(w) > 0;
        });
        break;
      case PhraseKind::expletive:
        out = pronoun_slot(seg, [](const std::string& w) { return w == "es"; });
        break;
      case PhraseKind::infinitive_clause:
        for (std::size_t i = seg.span.begin; i + 1 < seg.span.end; ++i) {
          const Token& zu = s_.tokens[i];
          const Token& inf = s_.tokens[i + 1];
          if (detail::to_lower(zu.surface) != "zu" || detail::is_capitalized(inf.surface)) continue;
          if (!detail::ends_with(inf.surface, "n")) continue;
          if (covered_[i + 1]) continue;
          out.push_back({TokenRef{{i, i + 2}, s_.surface(i, i + 2)}, {}, {i, i + 1}, false});
        }
        break;
    }
    return out;
  }

  bool conflicts(const Option& o, const std::vector<std::size_t>& picks, std::size_t upto) const {
    for (std::size_t k = 0; k < upto; ++k) {
      if (picks[k] == kUnfilled) continue;
      const Option& p = options_per_element_[k][picks[k]];
      for (auto c : o.chunks)
        if (std::find(p.chunks.begin(), p.chunks.end(), c) != p.chunks.end()) return true;
      for (auto t : o.tokens)
        if (std::find(p.tokens.begin(), p.tokens.end(), t) != p.tokens.end()) return true;
      // A contraction-free PP and a bare "zu" never share tokens with chunks,
      // but token options may sit inside a chunk another element took.
      for (auto t : o.tokens)
        for (auto c : p.chunks)
          if (covering_.chunks[c].span.contains(t)) return true;
    }
    return false;
  }

  void walk(std::size_t k, std::vector<std::size_t>& picks) {
    if (results_.size() >= options_.max_assignments) return;
    if (k == pattern_.elements.size()) {
      if (is_maximal(picks)) emit(picks);
      return;
    }
    const auto& opts = options_per_element_[k];
    for (std::size_t i = 0; i < opts.size(); ++i) {
      if (conflicts(opts[i], picks, k)) continue;
      picks.push_back(i);
      walk(k + 1, picks);
      picks.pop_back();
    }
    if (pattern_.elements[k].optional) {
      picks.push_back(kUnfilled);
      walk(k + 1, picks);
      picks.pop_back();
    }
  }

  bool is_maximal(const std::vector<std::size_t>& picks) const {
    for (std::size_t k = 0; k < picks.size(); ++k) {
      if (picks[k] != kUnfilled) continue;
      for (const Option& o : options_per_element_[k]) {
        std::vector<std::size_t> others = picks;
        others[k] = kUnfilled;
        if (!conflicts(o, others, others.size())) return false;
      }
    }
    return true;
  }

  void emit(const std::vector<std::size_t>& picks) {
    CandidateAssignment a;
    a.verb_lemma = site_.verb_lemma;
    a.occurrence = site_.occurrence;
    a.sentence_id = s_.id();
    a.pattern = pattern_;
    for (std::size_t k = 0; k < picks.size(); ++k) {
      if (picks[k] == kUnfilled) {
        a.bindings.emplace_back(Unfilled{});
        continue;
      }
      const Option& o = options_per_element_[k][picks[k]];
      a.bindings.push_back(o.binding);
      a.borrowed_subject = a.borrowed_subject || o.borrowed;
    }
    for (std::size_t i : in_scope_) a.in_scope_pps.push_back(covering_.chunks[i]);
    results_.push_back(std::move(a));
  }

  static constexpr std::size_t kUnfilled = static_cast<std::size_t>(-1);

  const FramePattern& pattern_;
  const MatchSite& site_;
  const Sentence& s_;
  const Covering& covering_;
  const Lexicon& lex_;
  const MatchOptions& options_;
  std::vector<std::size_t> in_scope_;
  std::vector<bool> covered_;
  std::vector<std::vector<Option>> options_per_element_;
  std::vector<CandidateAssignment> results_;
};

std::string binding_key(const Binding& b) {
  if (const auto* c = std::get_if<ChunkRef>(&b))
    return std::string(to_string(c->chunk.kind)) + std::to_string(c->chunk.span.begin) + "-" +
           std::to_string(c->chunk.span.end);
  if (const auto* t = std::get_if<TokenRef>(&b))
    return "T" + std::to_string(t->tokens.begin) + "-" + std::to_string(t->tokens.end);
  return "_";
}

}  // namespace

std::vector<CandidateAssignment> match_frame(const FramePattern& pattern, const MatchSite& site,
                                             const Covering& covering, std::size_t covering_id,
                                             const Lexicon& lex, const MatchOptions& options) {
  if (!site.sentence || site.segment >= site.segments.size()) return {};
  auto out = Binder(pattern, site, covering, lex, options).run();
  for (auto& a : out) a.covering_id = covering_id;
  return out;
}

std::vector<Covering> filter_coverings(std::span<const Covering> coverings,
                                       const FramePattern& pattern, const MatchSite& site,
                                       const Lexicon& lex, const MatchOptions& options) {
  std::vector<Covering> out;
  for (std::size_t i = 0; i < coverings.size(); ++i)
    if (!match_frame(pattern, site, coverings[i], i, lex, options).empty())
      out.push_back(coverings[i]);
  return out;
}

std::optional<std::string> check_assignment(const CandidateAssignment& a, const Covering& covering) {
  if (a.bindings.size() != a.pattern.elements.size()) return "binding count differs from pattern";
  std::set<std::pair<std::size_t, std::size_t>> used;
  for (std::size_t k = 0; k < a.bindings.size(); ++k) {
    const ComplementCode& e = a.pattern.elements[k];
    const Binding& b = a.bindings[k];
    if (std::holds_alternative<Unfilled>(b)) {
      if (!e.optional) return "required element " + e.code + " unfilled";
      continue;
    }
    if (const auto* c = std::get_if<ChunkRef>(&b)) {
      if (c->index >= covering.chunks.size() || !covering.chunks[c->index].same_as(c->chunk))
        return "element " + e.code + " bound to a chunk outside the covering";
      if (!used.insert({c->chunk.span.begin, c->chunk.span.end}).second)
        return "chunk bound twice";
      if (e.is_noun_phrase()) {
        if (c->chunk.kind != ChunkKind::np) return "element " + e.code + " bound to a non-NP";
        if (e.required_case && !c->chunk.case_set.contains(*e.required_case))
          return "element " + e.code + " bound to a case-incompatible NP";
      }
      if (e.is_pp() && c->chunk.kind != ChunkKind::pp) return "element " + e.code + " bound to a non-PP";
    }
  }
  return std::nullopt;
}

OccurrenceMatch match_occurrence(const Sentence& s, const ChartResult& chart,
                                 const Occurrence& occ, std::string_view verb_lemma,
                                 const FramePattern& pattern, const Lexicon& lex,
                                 const MatchOptions& options) {
  OccurrenceMatch m;
  m.occurrence = occ;
  m.sentence_id = s.id();
  m.segments = split_clauses(s, occ.token, chart.coverings.front().chunks);
  for (std::size_t i = 0; i < m.segments.size(); ++i)
    if (m.segments[i].verb_index) m.segment = i;
  m.coverings_total = chart.coverings.size();

  MatchSite site{&s, m.segments, m.segment, occ.token, occ, std::string(verb_lemma)};
  std::set<std::vector<std::string>> seen;
  for (std::size_t k = 0; k < chart.coverings.size(); ++k) {
    auto found = match_frame(pattern, site, chart.coverings[k], k, lex, options);
    if (found.empty()) continue;
    ++m.coverings_kept;
    for (auto& a : found) {
      std::vector<std::string> key;
      for (const auto& b : a.bindings) key.push_back(binding_key(b));
      if (seen.insert(key).second) m.assignments.push_back(std::move(a));
    }
  }
  return m;
}

}  // namespace vfe
