#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "strings.hpp"
#include "vfenrich/chunker.hpp"
#include "vfenrich/error.hpp"

namespace vfe {

std::string_view to_string(ChunkKind k) { return k == ChunkKind::np ? "NP" : "PP"; }

std::size_t Covering::covered_tokens() const {
  std::size_t n = 0;
  for (const auto& c : chunks) n += c.span.size();
  return n;
}

std::pair<std::string, Case> expand_contraction(const Token& t) {
  const auto& table = CaseTables::defaults().contractions;
  auto it = table.find(detail::to_lower(t.surface));
  if (t.pos != Tag::contracted_preposition || it == table.end())
    throw ContractViolation("'" + t.surface + "' is not a known contracted preposition");
  return it->second;
}

namespace {

CaseSet np_case_set(TokenRange span, const Sentence& s, const CaseTables& tables) {
  if (span.size() == 0) return CaseSet::all();
  const Token& first = s.tokens[span.begin];
  const std::string lower = detail::to_lower(first.surface);
  if (first.pos == Tag::determiner) {
    auto it = tables.determiners.find(lower);
    return it == tables.determiners.end() ? CaseSet::all() : it->second;
  }
  if (first.pos == Tag::pronoun && span.size() == 1) {
    auto it = tables.pronouns.find(lower);
    return it == tables.pronouns.end() ? CaseSet::all() : it->second;
  }
  return CaseSet::all();
}

std::optional<std::pair<std::string, CaseSet>> pp_head(const Token& t, const CaseTables& tables) {
  const std::string lower = detail::to_lower(t.surface);
  if (t.pos == Tag::contracted_preposition) {
    auto it = tables.contractions.find(lower);
    if (it == tables.contractions.end()) return std::nullopt;
    return std::pair{it->second.first, CaseSet{it->second.second}};
  }
  if (t.pos == Tag::preposition) return std::pair{lower, tables.governed(lower)};
  return std::nullopt;
}

}  // namespace

CaseSet chunk_case_set(ChunkKind kind, TokenRange span, const Sentence& s,
                       const CaseTables& tables) {
  if (kind == ChunkKind::np) return np_case_set(span, s, tables);
  if (span.size() == 0) return {};
  auto head = pp_head(s.tokens[span.begin], tables);
  if (!head) return {};
  return head->second & np_case_set({span.begin + 1, span.end}, s, tables);
}

Chunk make_chunk(ChunkKind kind, TokenRange span, std::size_t head, const Sentence& s,
                 const CaseTables& tables) {
  Chunk c;
  c.kind = kind;
  c.span = span;
  c.head_index = head;
  c.case_set = chunk_case_set(kind, span, s, tables);
  c.surface = s.surface(span.begin, span.end);
  const Token& h = s.tokens[head];
  c.head_lemma = h.lemma.value_or(h.surface);
  c.head_pos = h.pos;
  c.head_ne = h.ne_class;
  for (std::size_t i = head + 1; i < span.end && !c.apposition_ne; ++i) c.apposition_ne = s.tokens[i].ne_class;
  std::size_t np_start = span.begin;
  if (kind == ChunkKind::pp) {
    if (auto p = pp_head(s.tokens[span.begin], tables)) c.preposition = p->first;
    ++np_start;
  }
  if (np_start < span.end && s.tokens[np_start].pos == Tag::determiner)
    c.determiner = s.tokens[np_start].surface;
  return c;
}

Chunk assign_case(Chunk c, const Sentence& s, const CaseTables& tables) {
  c.case_set = chunk_case_set(c.kind, c.span, s, tables);
  if (c.case_set.empty())
    throw CaseClashError("case clash in " + std::string(to_string(c.kind)) + " '" +
                         s.surface(c.span.begin, c.span.end) + "'");
  return c;
}

namespace {

// ----------------------------------------------------------------------------
// Chart

struct Passive {
  int symbol;
  std::size_t begin;
  std::size_t end;
  std::size_t head;  // token index
};

struct Active {
  std::size_t rule;
  std::size_t dot;
  std::size_t begin;
  std::size_t end;
  std::vector<std::size_t> children;  // passive edge indices
};

class Chart {
 public:
  Chart(const Sentence& s, const Grammar& g, const CaseTables& tables)
      : sentence_(s), grammar_(g), tables_(tables) {
    for (const auto& r : g.rules()) {
      intern(r.lhs);
      for (const auto& sym : r.rhs) intern(sym);
    }
    for (std::size_t i = 0; i < g.rules().size(); ++i)
      by_first_[symbol_of(g.rules()[i].rhs.front())].push_back(i);
    np_ = symbol_of("NP");
    pp_ = symbol_of("PP");
    starting_at_.resize(s.tokens.size() + 1);
    actives_ending_at_.resize(s.tokens.size() + 1);
  }

  void run() {
    for (std::size_t i = 0; i < sentence_.tokens.size(); ++i) {
      auto it = ids_.find(std::string(to_string(sentence_.tokens[i].pos)));
      if (it != ids_.end()) add_passive(it->second, i, i + 1, i);
    }
    while (!agenda_.empty()) {
      std::size_t p = agenda_.front();
      agenda_.pop_front();
      const Passive edge = passives_[p];
      // Predict: rules whose right-hand side starts with this symbol.
      if (auto it = by_first_.find(edge.symbol); it != by_first_.end())
        for (std::size_t r : it->second) advance({r, 0, edge.begin, edge.begin, {}}, p);
      // Complete: active edges waiting at this edge's start for its symbol.
      const auto waiting = actives_ending_at_[edge.begin];
      for (std::size_t a : waiting) {
        const Active& act = actives_[a];
        if (symbol_of(grammar_.rules()[act.rule].rhs[act.dot]) == edge.symbol)
          advance(act, p);
      }
    }
  }

  std::vector<Chunk> chunks() const {
    std::vector<Chunk> out;
    for (const auto& p : passives_) {
      if (p.symbol != np_ && p.symbol != pp_) continue;
      out.push_back(make_chunk(p.symbol == np_ ? ChunkKind::np : ChunkKind::pp,
                               {p.begin, p.end}, p.head, sentence_, tables_));
    }
    std::sort(out.begin(), out.end(), [](const Chunk& a, const Chunk& b) {
      return std::tie(a.span.begin, a.span.end, a.kind) < std::tie(b.span.begin, b.span.end, b.kind);
    });
    return out;
  }

 private:
  int intern(const std::string& sym) {
    auto [it, fresh] = ids_.emplace(sym, static_cast<int>(ids_.size()));
    if (fresh) names_.push_back(sym);
    return it->second;
  }
  int symbol_of(const std::string& sym) const {
    auto it = ids_.find(sym);
    return it == ids_.end() ? -1 : it->second;
  }

  // Moves `act` over passive edge p and files the result.
  void advance(Active act, std::size_t p) {
    const Passive& edge = passives_[p];
    act.dot += 1;
    act.end = edge.end;
    act.children.push_back(p);
    const GrammarRule& rule = grammar_.rules()[act.rule];
    if (act.dot == rule.rhs.size()) {
      add_passive(symbol_of(rule.lhs), act.begin, act.end, head_of(act.children));
      return;
    }
    auto key = std::make_tuple(act.rule, act.dot, act.begin, act.end);
    if (!seen_actives_.insert(key).second) return;
    std::size_t idx = actives_.size();
    actives_.push_back(act);
    actives_ending_at_[act.end].push_back(idx);
    const int wanted = symbol_of(rule.rhs[act.dot]);
    const auto candidates = starting_at_[act.end];
    for (std::size_t q : candidates)
      if (passives_[q].symbol == wanted) advance(actives_[idx], q);
  }

  void add_passive(int symbol, std::size_t b, std::size_t e, std::size_t head) {
    if (!seen_passives_.insert({symbol, b, e}).second) return;
    if ((symbol == np_ || symbol == pp_) &&
        chunk_case_set(symbol == np_ ? ChunkKind::np : ChunkKind::pp, {b, e}, sentence_, tables_)
            .empty())
      return;
    passives_.push_back({symbol, b, e, head});
    starting_at_[b].push_back(passives_.size() - 1);
    agenda_.push_back(passives_.size() - 1);
  }

  // Head token: an embedded NP's head when present, otherwise the rightmost
  // child headed by a noun, name or pronoun, then a cardinal, then the last.
  std::size_t head_of(const std::vector<std::size_t>& children) const {
    for (std::size_t c : children)
      if (passives_[c].symbol == np_) return passives_[c].head;
    for (Tag want : {Tag::noun, Tag::proper_noun, Tag::pronoun, Tag::cardinal}) {
      for (auto it = children.rbegin(); it != children.rend(); ++it) {
        std::size_t h = passives_[*it].head;
        Tag t = sentence_.tokens[h].pos;
        if (t == want || (want == Tag::noun && (t == Tag::proper_noun || t == Tag::pronoun)))
          return h;
      }
    }
    return passives_[children.back()].head;
  }

  const Sentence& sentence_;
  const Grammar& grammar_;
  const CaseTables& tables_;
  std::map<std::string, int> ids_;
  std::vector<std::string> names_;
  std::map<int, std::vector<std::size_t>> by_first_;
  int np_ = -1;
  int pp_ = -1;
  std::vector<Passive> passives_;
  std::vector<Active> actives_;
  std::set<std::tuple<int, std::size_t, std::size_t>> seen_passives_;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> seen_actives_;
  std::vector<std::vector<std::size_t>> starting_at_;
  std::vector<std::vector<std::size_t>> actives_ending_at_;
  std::deque<std::size_t> agenda_;
};

// ----------------------------------------------------------------------------
// Maximal coverings

class CoveringEnumerator {
 public:
  CoveringEnumerator(const std::vector<Chunk>& chunks, std::size_t n, std::size_t limit)
      : chunks_(chunks), n_(n), limit_(limit), starts_(n + 1), ends_(n + 1), unparsed_(n, false) {
    for (std::size_t i = 0; i < chunks.size(); ++i) {
      starts_[chunks[i].span.begin].push_back(i);
      ends_[chunks[i].span.end].push_back(i);
    }
  }

  std::vector<std::vector<std::size_t>> run() {
    walk(0);
    return found_;
  }
  bool truncated() const { return truncated_; }

 private:
  void walk(std::size_t pos) {
    if (found_.size() >= limit_) {
      truncated_ = true;
      return;
    }
    if (pos == n_) {
      if (is_maximal()) found_.push_back(chosen_);
      return;
    }
    for (std::size_t c : starts_[pos]) {
      chosen_.push_back(c);
      walk(chunks_[c].span.end);
      chosen_.pop_back();
    }
    unparsed_[pos] = true;
    bool addable = false;
    for (std::size_t c : ends_[pos + 1]) {
      const auto& sp = chunks_[c].span;
      if (std::all_of(unparsed_.begin() + sp.begin, unparsed_.begin() + sp.end,
                      [](bool b) { return b; })) {
        addable = true;
        break;
      }
    }
    if (!addable) walk(pos + 1);
    unparsed_[pos] = false;
  }

  bool is_maximal() const {
    for (std::size_t i = 0; i < chunks_.size(); ++i) {
      const auto& cand = chunks_[i].span;
      bool blocked = false;
      bool extends = false;
      for (std::size_t c : chosen_) {
        const auto& sp = chunks_[c].span;
        if (!cand.overlaps(sp)) continue;
        if (cand.contains(sp) && cand != sp && !extends) {
          extends = true;
          continue;
        }
        blocked = true;
        break;
      }
      // Free chunk (add) or strict superset of exactly one chosen chunk
      // and disjoint from the rest (extend).
      if (!blocked) return false;
    }
    return true;
  }

  const std::vector<Chunk>& chunks_;
  std::size_t n_;
  std::size_t limit_;
  std::vector<std::vector<std::size_t>> starts_;
  std::vector<std::vector<std::size_t>> ends_;
  std::vector<bool> unparsed_;
  std::vector<std::size_t> chosen_;
  std::vector<std::vector<std::size_t>> found_;
  bool truncated_ = false;
};

}  // namespace

ChartResult parse_chunks(const Sentence& s, const Grammar& g, const CaseTables& tables,
                         const ChunkerOptions& options) {
  Chart chart(s, g, tables);
  chart.run();
  ChartResult result;
  result.chunks = chart.chunks();

  CoveringEnumerator walker(result.chunks, s.tokens.size(), std::max<std::size_t>(1, options.max_coverings));
  for (const auto& picks : walker.run()) {
    Covering cov;
    std::vector<bool> covered(s.tokens.size(), false);
    for (std::size_t c : picks) {
      cov.chunks.push_back(result.chunks[c]);
      for (std::size_t i = result.chunks[c].span.begin; i < result.chunks[c].span.end; ++i)
        covered[i] = true;
    }
    for (std::size_t i = 0; i < covered.size(); ++i)
      if (!covered[i]) cov.unparsed.push_back(i);
    result.coverings.push_back(std::move(cov));
  }
  result.truncated = walker.truncated();
  if (result.coverings.empty()) {
    Covering none;
    for (std::size_t i = 0; i < s.tokens.size(); ++i) none.unparsed.push_back(i);
    result.coverings.push_back(std::move(none));
  }
  auto spans = [](const Covering& c) {
    std::vector<std::pair<std::size_t, std::size_t>> v;
    for (const auto& ch : c.chunks) v.emplace_back(ch.span.begin, ch.span.end);
    return v;
  };
  std::stable_sort(result.coverings.begin(), result.coverings.end(),
                   [&](const Covering& a, const Covering& b) {
                     if (a.covered_tokens() != b.covered_tokens())
                       return a.covered_tokens() > b.covered_tokens();
                     if (a.chunks.size() != b.chunks.size()) return a.chunks.size() < b.chunks.size();
                     return spans(a) < spans(b);
                   });
  return result;
}

}  // namespace vfe
