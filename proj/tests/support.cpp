#include "support.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <sys/wait.h>

namespace testing {

using vfe::Tag;

std::filesystem::path data_dir() { return VFENRICH_TEST_DATA; }

const vfe::Lexicon& toy_lexicon() {
  static const vfe::Lexicon lex = vfe::Lexicon::load_file(data_dir() / "lexicon.json");
  return lex;
}

const vfe::NeConfig& toy_ne() {
  static const vfe::NeConfig cfg = vfe::NeConfig::load_file(data_dir() / "ne_config.json");
  return cfg;
}

vfe::Sentence make_sentence(const std::vector<std::pair<std::string, Tag>>& tokens,
                            const std::string& doc, std::size_t index) {
  vfe::Sentence s;
  s.document = doc;
  s.index = index;
  for (const auto& [surface, tag] : tokens) {
    if (!s.text.empty()) s.text += ' ';
    vfe::Token t;
    t.surface = surface;
    t.pos = tag;
    t.span = {s.text.size(), s.text.size() + surface.size()};
    s.text += surface;
    s.tokens.push_back(t);
  }
  return s;
}

vfe::Sentence prep(const std::string& text) {
  auto sents = vfe::preprocess_document(text, "t", toy_lexicon(), toy_ne());
  if (sents.size() != 1) throw std::runtime_error("expected one sentence: " + text);
  return sents.front();
}

namespace {

struct Word {
  const char* surface;
  Tag tag;
};

// Case bits: nom 1, gen 2, dat 4, acc 8.
constexpr unsigned N = 1, G = 2, D = 4, A = 8, ALL = 15;

const std::map<std::string, unsigned>& det_cases() {
  static const std::map<std::string, unsigned> m{
      {"der", N | D | G}, {"die", N | A}, {"das", N | A}, {"dem", D},
      {"den", A | D},     {"des", G},     {"einem", D},   {"einen", A}};
  return m;
}
const std::map<std::string, unsigned>& pronoun_cases() {
  static const std::map<std::string, unsigned> m{{"er", N}, {"ihn", A}, {"ihm", D}, {"sich", A | D}};
  return m;
}
const std::map<std::string, unsigned>& prep_cases() {
  static const std::map<std::string, unsigned> m{
      {"mit", D}, {"für", A}, {"in", D | A}, {"nach", D}, {"ohne", A},
      {"am", D},  {"ins", A}, {"zum", D}};
  return m;
}

unsigned np_cases(const vfe::Sentence& s, std::size_t b, std::size_t e) {
  const auto& t = s.tokens[b];
  if (t.pos == Tag::determiner) return det_cases().at(t.surface);
  if (t.pos == Tag::pronoun && e - b == 1) return pronoun_cases().at(t.surface);
  return ALL;
}

unsigned oracle_cases(vfe::ChunkKind k, const vfe::Sentence& s, std::size_t b, std::size_t e) {
  if (k == vfe::ChunkKind::np) return np_cases(s, b, e);
  return prep_cases().at(s.tokens[b].surface) & np_cases(s, b + 1, e);
}

}  // namespace

vfe::Sentence random_sentence(std::mt19937& rng, std::size_t max_len) {
  static const std::vector<Word> vocab{
      {"der", Tag::determiner}, {"die", Tag::determiner},   {"dem", Tag::determiner},
      {"den", Tag::determiner}, {"des", Tag::determiner},   {"einem", Tag::determiner},
      {"das", Tag::determiner}, {"einen", Tag::determiner}, {"alte", Tag::adjective},
      {"roten", Tag::adjective}, {"Pkw", Tag::noun},        {"Baum", Tag::noun},
      {"Mann", Tag::noun},      {"Fahrer", Tag::noun},      {"Opel", Tag::proper_noun},
      {"Müller", Tag::proper_noun}, {"er", Tag::pronoun},   {"ihn", Tag::pronoun},
      {"ihm", Tag::pronoun},    {"sich", Tag::pronoun},     {"mit", Tag::preposition},
      {"für", Tag::preposition}, {"in", Tag::preposition},  {"nach", Tag::preposition},
      {"ohne", Tag::preposition}, {"am", Tag::contracted_preposition},
      {"ins", Tag::contracted_preposition}, {"zum", Tag::contracted_preposition},
      {"3", Tag::cardinal},     {"fuhr", Tag::verb_finite}, {",", Tag::comma},
      {"und", Tag::conjunction}, {"dort", Tag::adverb},     {"soll", Tag::other}};
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  std::vector<std::pair<std::string, Tag>> toks;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    const Word& w = vocab[pick(rng)];
    toks.emplace_back(w.surface, w.tag);
  }
  return make_sentence(toks, "rand");
}

std::set<ChunkKey> derivable_chunks(const vfe::Sentence& s,
                                    const std::vector<vfe::GrammarRule>& rules) {
  const std::size_t n = s.tokens.size();
  std::map<std::tuple<std::string, std::size_t, std::size_t>, bool> memo;

  std::function<bool(const std::string&, std::size_t, std::size_t)> derives;
  // Can symbols rhs[k..] cover exactly [b, e)?
  std::function<bool(const std::vector<std::string>&, std::size_t, std::size_t, std::size_t)> seq =
      [&](const std::vector<std::string>& rhs, std::size_t k, std::size_t b, std::size_t e) {
        if (k == rhs.size()) return b == e;
        const std::size_t rest = rhs.size() - k - 1;
        for (std::size_t m = b + 1; m + rest <= e; ++m)
          if (derives(rhs[k], b, m) && seq(rhs, k + 1, m, e)) return true;
        return false;
      };
  derives = [&](const std::string& sym, std::size_t b, std::size_t e) -> bool {
    if (vfe::Grammar::is_terminal(sym))
      return e == b + 1 && vfe::to_string(s.tokens[b].pos) == sym;
    auto key = std::make_tuple(sym, b, e);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    memo[key] = false;  // rules are not left-recursive on equal spans
    bool ok = false;
    for (const auto& r : rules)
      if (r.lhs == sym && seq(r.rhs, 0, b, e)) {
        ok = true;
        break;
      }
    if (ok && (sym == "NP" || sym == "PP")) {
      const auto kind = sym == "NP" ? vfe::ChunkKind::np : vfe::ChunkKind::pp;
      ok = oracle_cases(kind, s, b, e) != 0;
    }
    memo[key] = ok;
    return ok;
  };

  std::set<ChunkKey> out;
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t e = b + 1; e <= n; ++e)
      for (auto kind : {vfe::ChunkKind::np, vfe::ChunkKind::pp})
        if (derives(kind == vfe::ChunkKind::np ? "NP" : "PP", b, e))
          out.insert({kind, b, e, oracle_cases(kind, s, b, e)});
  return out;
}

std::set<ChunkKey> chart_chunks(const vfe::ChartResult& r) {
  std::set<ChunkKey> out;
  for (const auto& c : r.chunks) {
    unsigned bits = 0;
    if (c.case_set.contains(vfe::Case::nominative)) bits |= N;
    if (c.case_set.contains(vfe::Case::genitive)) bits |= G;
    if (c.case_set.contains(vfe::Case::dative)) bits |= D;
    if (c.case_set.contains(vfe::Case::accusative)) bits |= A;
    out.insert({c.kind, c.span.begin, c.span.end, bits});
  }
  return out;
}

std::set<SpanList> maximal_coverings(const SpanList& spans) {
  auto overlap = [](auto a, auto b) { return a.first < b.second && b.first < a.second; };
  auto contains = [](auto a, auto b) { return a.first <= b.first && b.second <= a.second; };
  std::set<SpanList> out;
  const std::size_t m = spans.size();
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    SpanList chosen;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) chosen.push_back(spans[i]);
    bool disjoint = true;
    for (std::size_t i = 0; i < chosen.size() && disjoint; ++i)
      for (std::size_t j = i + 1; j < chosen.size(); ++j)
        if (overlap(chosen[i], chosen[j])) disjoint = false;
    if (!disjoint) continue;
    bool maximal = true;
    for (const auto& c : spans) {
      if (std::find(chosen.begin(), chosen.end(), c) != chosen.end()) continue;
      std::size_t hit = 0, inside = 0;
      for (const auto& x : chosen)
        if (overlap(c, x)) {
          ++hit;
          if (contains(c, x)) ++inside;
        }
      // addable, or a strict extension of exactly one chosen chunk
      if (hit == 0 || (hit == 1 && inside == 1)) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    std::sort(chosen.begin(), chosen.end());
    out.insert(chosen);
  }
  return out;
}

std::vector<vfe::Synset> random_synsets(std::mt19937& rng, std::size_t n) {
  std::vector<vfe::Synset> out;
  std::uniform_real_distribution<double> u(0, 1);
  for (std::size_t i = 0; i < n; ++i) {
    vfe::Synset s;
    char id[24];
    std::snprintf(id, sizeof id, "s%02zu", i);
    s.id = id;
    s.lemmas = {std::string("w") + id};
    if (i > 0 && u(rng) > 0.1) {
      std::uniform_int_distribution<std::size_t> pick(0, i - 1);
      const std::size_t k = u(rng) < 0.7 ? 1 : 2;
      for (std::size_t j = 0; j < k; ++j) {
        char h[8];
        std::snprintf(h, sizeof h, "s%02zu", pick(rng));
        if (std::find(s.hypernyms.begin(), s.hypernyms.end(), h) == s.hypernyms.end())
          s.hypernyms.push_back(h);
      }
    }
    if (s.hypernyms.empty()) s.label = "cat-" + s.id;
    out.push_back(std::move(s));
  }
  std::shuffle(out.begin(), out.end(), rng);  // forward references must load
  return out;
}

std::optional<std::string> lcs_oracle(const std::vector<vfe::Synset>& synsets,
                                      const std::string& a, const std::string& b) {
  std::map<std::string, const vfe::Synset*> by_id;
  for (const auto& s : synsets) by_id[s.id] = &s;
  auto ancestors = [&](const std::string& id) {
    std::set<std::string> seen{id};
    std::vector<std::string> todo{id};
    while (!todo.empty()) {
      auto cur = todo.back();
      todo.pop_back();
      for (const auto& h : by_id.at(cur)->hypernyms)
        if (seen.insert(h).second) todo.push_back(h);
    }
    return seen;
  };
  std::map<std::string, std::size_t> depth_memo;
  std::function<std::size_t(const std::string&)> depth = [&](const std::string& id) {
    if (auto it = depth_memo.find(id); it != depth_memo.end()) return it->second;
    std::size_t d = 0;
    for (const auto& h : by_id.at(id)->hypernyms) d = std::max(d, depth(h) + 1);
    return depth_memo[id] = d;
  };
  const auto sa = ancestors(a), sb = ancestors(b);
  std::optional<std::string> best;
  for (const auto& x : sa) {
    if (!sb.count(x)) continue;
    if (!best || depth(x) > depth(*best)) best = x;  // set order keeps the smallest id on ties
  }
  return best;
}

CommandResult run(const std::string& cmd) {
  CommandResult r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return {-1, {}};
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = ::pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string cli() { return VFENRICH_CLI_PATH; }

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace testing
