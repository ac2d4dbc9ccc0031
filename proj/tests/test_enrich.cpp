#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support.hpp"
#include "vfenrich/enrich.hpp"
#include "vfenrich/pipeline.hpp"

using namespace vfe;
using testing::prep;
using testing::toy_lexicon;

namespace {

Chunk first_chunk(const std::string& text, ChunkKind kind) {
  auto s = prep(text);
  const auto chart = parse_chunks(s, Grammar::defaults());
  for (const auto& c : chart.coverings.front().chunks)
    if (c.kind == kind) return c;
  throw std::runtime_error("no chunk in " + text);
}

Corpus load(const std::vector<std::string>& dirs, std::size_t window = 1) {
  RunConfig cfg;
  cfg.lexicon_path = testing::data_dir() / "lexicon.json";
  cfg.ne_config_path = testing::data_dir() / "ne_config.json";
  for (const auto& d : dirs) cfg.corpus_paths.push_back(testing::data_dir() / d);
  cfg.scope_window = window;
  return prepare_corpus(cfg, Resources::load(cfg));
}

EnrichedFrame run_verb(const std::string& verb, const std::vector<std::string>& dirs,
                       std::size_t window = 1, bool filter = true) {
  RunConfig cfg;
  cfg.lexicon_path = testing::data_dir() / "lexicon.json";
  cfg.ne_config_path = testing::data_dir() / "ne_config.json";
  for (const auto& d : dirs) cfg.corpus_paths.push_back(testing::data_dir() / d);
  cfg.scope_window = window;
  cfg.adjunct_filter = filter;
  auto res = Resources::load(cfg);
  return enrich_verb(verb, prepare_corpus(cfg, res), res, cfg).frame;
}

const EnrichedElement& element(const EnrichedFrame& f, const std::string& code) {
  for (const auto& e : f.elements)
    if (e.code == code) return e;
  throw std::runtime_error("no element " + code);
}

}  // namespace

TEST_CASE("is_adjunct_pp") {
  const auto& lex = toy_lexicon();
  const auto am_montag = first_chunk("Der Pkw kollidierte am Montag.", ChunkKind::pp);
  CHECK(is_adjunct_pp(am_montag, parse_frame("NN.Pp"), lex));
  CHECK_FALSE(is_adjunct_pp(am_montag, parse_frame("NN.BT"), lex));
  CHECK_FALSE(is_adjunct_pp(first_chunk("Er kollidierte mit dem PKW.", ChunkKind::pp), parse_frame("NN.Pp"), lex));
  const auto stadt = first_chunk("Er kollidierte in der Stadt.", ChunkKind::pp);
  CHECK(is_adjunct_pp(stadt, parse_frame("NN.Pp"), lex));
  CHECK_FALSE(is_adjunct_pp(stadt, parse_frame("NN.BL"), lex));
  CHECK(is_adjunct_pp(first_chunk("Er kollidierte auf der A 9.", ChunkKind::pp), parse_frame("NN.Pp"), lex));
  CHECK(is_adjunct_pp(first_chunk("Er verstarb am 01.02.2003.", ChunkKind::pp), parse_frame("NN.Pp"), lex));
  auto unknown = classify_adjunct(first_chunk("Er kollidierte mit dem Xylophon.", ChunkKind::pp),
                                  parse_frame("NN.Pp"), lex);
  CHECK_FALSE(unknown.adjunct);
  CHECK_FALSE(unknown.resolved);
}

TEST_CASE("count_prepositions on the mini-corpus") {
  const auto& lex = toy_lexicon();
  const auto pattern = parse_frame("NN.Pp");
  for (auto [window, expected] : {std::pair{1u, 5u}, std::pair{2u, 7u}}) {
    auto corpus = load({"corpus/kollidieren"}, window);
    std::vector<CandidateAssignment> all;
    for (const auto& o : find_verb_occurrences(corpus.sentences, "kollidieren", lex)) {
      auto m = match_occurrence(corpus.sentences[o.sentence], corpus.charts[o.sentence], o,
                                "kollidieren", pattern, lex, {window, 256});
      all.insert(all.end(), m.assignments.begin(), m.assignments.end());
    }
    auto stats = count_prepositions(all, pattern, lex, true);
    CHECK(stats.counts == std::map<std::string, std::size_t>{{"mit", expected}});
    CHECK(stats.total_occurrences == 6);
  }
  auto empty = count_prepositions({}, pattern, lex, true);
  CHECK(empty.counts.empty());
  CHECK(empty.total_occurrences == 0);
}

TEST_CASE("contractions are counted under the expanded preposition") {
  auto f = run_verb("versterben", {"corpus/control"});
  CHECK(f.stats.counts == std::map<std::string, std::size_t>{{"an", 1}});
  REQUIRE(f.dominant);
  CHECK(f.dominant->case_ == Case::dative);
}

TEST_CASE("select_dominant_preposition") {
  PrepositionStats s;
  s.counts = {{"mit", 27}, {"nach", 5}, {"bei", 2}, {"an", 2}, {"als", 2}, {"in", 1}};
  auto d = select_dominant_preposition(s);
  REQUIRE(d);
  CHECK(d->preposition == "mit");
  CHECK(d->case_ == Case::dative);
  CHECK(d->count == 27);
  CHECK(d->ties.empty());

  CHECK_FALSE(select_dominant_preposition(PrepositionStats{}));

  PrepositionStats tie;
  tie.counts = {{"auf", 3}, {"an", 3}};
  tie.case_counts["an"] = {{Case::accusative, 3}, {Case::dative, 1}};
  auto t = select_dominant_preposition(tie);
  REQUIRE(t);
  CHECK(t->preposition == "an");
  CHECK(t->ties == std::vector<std::string>{"an", "auf"});
  CHECK(t->case_ == Case::accusative);  // most observed among the governed cases
}

TEST_CASE("dominant selection property") {
  std::mt19937 rng(3);
  const char* preps[] = {"mit", "nach", "an", "auf", "in", "von", "bei", "zu", "als"};
  std::uniform_int_distribution<int> count(1, 6), n(0, 9);
  for (int round = 0; round < 500; ++round) {
    PrepositionStats s;
    for (int i = n(rng); i > 0; --i) s.counts[preps[n(rng) % 9]] += count(rng);
    auto d = select_dominant_preposition(s);
    CHECK(d.has_value() == !s.counts.empty());
    if (!d) continue;
    for (const auto& [p, c] : s.counts) {
      CHECK(d->count >= c);
      if (c == d->count) CHECK(p >= d->preposition);
    }
    CHECK(s.counts.at(d->preposition) == d->count);
    CHECK(CaseTables::defaults().governed(d->preposition).contains(d->case_));
  }
}

TEST_CASE("classify_filler") {
  const auto& lex = toy_lexicon();
  auto np = first_chunk("... sein LKW kollidierte.", ChunkKind::np);
  auto o = classify_filler(ChunkRef{0, np}, 0, lex);
  REQUIRE(o);
  CHECK(o->kind == FillerKind::common_noun);
  CHECK(o->category == "vehicle");
  CHECK(o->synset == "lkw-1");

  auto reg = first_chunk("Der Halter G 1234/11 verstarb.", ChunkKind::np);
  auto ro = classify_filler(ChunkRef{0, reg}, 0, lex);
  REQUIRE(ro);
  CHECK(ro->kind == FillerKind::named_entity);
  CHECK(ro->ne == NeClass::registration_number);
  CHECK(ro->category == "person");

  auto er = first_chunk("Er verstarb.", ChunkKind::np);
  auto eo = classify_filler(ChunkRef{0, er}, 0, lex);
  REQUIRE(eo);
  CHECK(eo->kind == FillerKind::pronoun);
  CHECK(eo->category == "person");

  auto unknown = classify_filler(ChunkRef{0, first_chunk("Der Xylophon kam.", ChunkKind::np)}, 0, lex);
  REQUIRE(unknown);
  CHECK(unknown->category == kUnknownCategory);
  CHECK_FALSE(classify_filler(Unfilled{}, 0, lex));
}

TEST_CASE("generalize_categories") {
  const auto& lex = toy_lexicon();
  std::vector<FillerObservation> obs;
  auto add = [&](const std::string& text, int times) {
    auto o = classify_filler(ChunkRef{0, first_chunk(text, ChunkKind::np)}, 0, lex);
    for (int i = 0; i < times; ++i) obs.push_back(*o);
  };
  add("Er kam.", 11);
  add("Der Halter G 1234/11 kam.", 6);
  add("Dann kam Müller.", 1);
  add("Der PKW kam.", 16);
  auto p = generalize_categories(obs, lex);
  CHECK(p.per_category == std::map<std::string, std::size_t>{{"person", 18}, {"vehicle", 16}});
  CHECK(p.generalization == "verkehrsteilnehmer-1");
  CHECK(p.observations() == obs.size());

  std::vector<FillerObservation> one(obs.end() - 1, obs.end());
  auto single = generalize_categories(one, lex);
  CHECK(single.per_category.size() == 1);
  CHECK_FALSE(single.generalization);

  std::vector<FillerObservation> pp;
  for (const char* t : {"Er kollidierte mit einem Pkw.", "Er kollidierte mit einem Baum.",
                        "Er kollidierte mit dem Mercedes.", "Er kollidierte mit der Mittelleitplanke.",
                        "Er kollidierte mit einem Verkehrsschild."})
    pp.push_back(*classify_filler(ChunkRef{0, first_chunk(t, ChunkKind::pp)}, 1, lex));
  auto pp_profile = generalize_categories(pp, lex);
  REQUIRE(pp_profile.generalization);
  CHECK(lex.synset(*pp_profile.generalization).category == "solid-object");
}

TEST_CASE("enriched frames") {
  auto k = run_verb("kollidieren", {"corpus/kollidieren"});
  REQUIRE(k.pattern);
  CHECK(k.pattern->raw == "NN.Pp");
  CHECK(k.occurrences_examined == 6);
  const auto& nn = element(k, "NN");
  CHECK(nn.case_ == Case::nominative);
  for (const auto& [c, n] : nn.profile.per_category) CHECK((c == "person" || c == "vehicle"));
  const auto& pp = element(k, "Pp");
  CHECK(pp.preposition == "mit");
  CHECK(pp.case_ == Case::dative);
  REQUIRE(pp.profile.generalization);
  CHECK(toy_lexicon().synset(*pp.profile.generalization).category == "solid-object");

  auto b = run_verb("befahren", {"corpus/befahren/autobahn.txt"});
  const auto& an = element(b, "AN");
  CHECK(an.fillers.front() == "die Autobahn");

  auto none = run_verb("operieren", {"corpus/kollidieren"});
  CHECK(none.occurrences_examined == 0);
  for (const auto& e : none.elements) {
    CHECK(e.evidence == 0);
    CHECK_FALSE(e.sufficient);
  }

  auto unknown = run_verb("schwimmen", {"corpus/kollidieren"});
  CHECK_FALSE(unknown.pattern);
  CHECK(!unknown.warnings.empty());
}

TEST_CASE("befahren object is a traffic route") {
  const auto& lex = toy_lexicon();
  auto s = prep("Er befuhr die Autobahn.");
  auto chart = parse_chunks(s, Grammar::defaults());
  auto occ = find_verb_occurrences(std::span(&s, 1), "befahren", lex);
  REQUIRE(occ.size() == 1);
  const auto pattern = parse_frame("NN.AN");
  std::vector<OccurrenceMatch> m{match_occurrence(s, chart, occ[0], "befahren", pattern, lex)};
  auto f = enrich_pattern("befahren", pattern, m, 1, lex, CaseTables::defaults());
  const auto& an = element(f, "AN");
  CHECK(an.profile.per_category == std::map<std::string, std::size_t>{{"traffic-route", 1}});
  CHECK(an.case_ == Case::accusative);
}

TEST_CASE("adjunct filter flag") {
  auto on = run_verb("kollidieren", {"corpus/kollidieren", "corpus/control"});
  auto off = run_verb("kollidieren", {"corpus/kollidieren", "corpus/control"}, 1, false);
  CHECK(on.stats.counts.at("mit") == off.stats.counts.at("mit"));
  CHECK(on.stats.counts.count("an") == 0);
  CHECK(off.stats.counts.at("an") == 1);
}

TEST_CASE("randomized assignment sets: filter monotonicity and conservation") {
  const auto& lex = toy_lexicon();
  std::vector<Chunk> pool;
  for (const char* t : {"Er kam am Montag.", "Er kam mit dem PKW.", "Er kam in der Stadt.",
                        "Er kam nach dem Unfall.", "Er kam auf der Autobahn.", "Er kam mit einem Baum.",
                        "Er kam von der Fahrbahn.", "Er kam mit dem Xylophon.", "Er kam zum Abend.",
                        "Er kam bei dem Arzt."})
    pool.push_back(first_chunk(t, ChunkKind::pp));
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i].span = {10 * i, 10 * i + 3};
  const char* frames[] = {"NN.Pp", "NN.BT", "NN.BL", "NN.AN.BL", "NN.PP"};
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> occs(0, 8), coin(0, 1), fr(0, 4);
  std::size_t violations = 0;
  for (int round = 0; round < 100; ++round) {
    const auto pattern = parse_frame(frames[fr(rng)]);
    std::vector<CandidateAssignment> set;
    std::size_t in_scope = 0;
    for (int o = occs(rng); o > 0; --o) {
      CandidateAssignment a;
      a.verb_lemma = "v";
      a.occurrence = {static_cast<std::size_t>(o), 0};
      a.sentence_id = "d#" + std::to_string(o);
      a.pattern = pattern;
      for (const auto& c : pool)
        if (coin(rng)) a.in_scope_pps.push_back(c);
      in_scope += a.in_scope_pps.size();
      set.push_back(a);
      if (coin(rng)) set.push_back(a);  // a second covering with the same PPs
    }
    auto on = count_prepositions(set, pattern, lex, true);
    auto off = count_prepositions(set, pattern, lex, false);
    for (const auto& [p, c] : on.counts)
      if (!off.counts.count(p) || off.counts.at(p) < c) ++violations;
    if (off.total() != in_scope || on.total() > in_scope) ++violations;
    // BT/BL exception
    for (const auto& c : pool) {
      auto h = classify_head(c, lex);
      if (pattern.has_code("BT") && h.has_label("time") && !h.has_label("location") &&
          is_adjunct_pp(c, pattern, lex))
        ++violations;
      if (pattern.has_code("BL") && h.has_label("location") && !h.has_label("time") &&
          is_adjunct_pp(c, pattern, lex))
        ++violations;
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("merge is associative and commutative") {
  PrepositionStats a, b, c;
  a.counts = {{"mit", 2}};
  a.case_counts["mit"] = {{Case::dative, 2}};
  a.total_occurrences = 2;
  b.counts = {{"mit", 1}, {"an", 3}};
  b.total_occurrences = 3;
  c.counts = {{"in", 1}};
  c.total_occurrences = 1;
  auto ab_c = a;
  ab_c.merge(b);
  ab_c.merge(c);
  auto bc = b;
  bc.merge(c);
  auto a_bc = a;
  a_bc.merge(bc);
  auto cba = c;
  cba.merge(b);
  cba.merge(a);
  CHECK(ab_c.counts == a_bc.counts);
  CHECK(ab_c.counts == cba.counts);
  CHECK(ab_c.case_counts == cba.case_counts);
  CHECK(ab_c.total_occurrences == 6);
}
