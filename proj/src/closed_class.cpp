#include "closed_class.hpp"

#include "strings.hpp"

namespace vfe::detail {

namespace {

using enum Case;

void add_ein_pattern(std::map<std::string, CaseSet>& table, const std::string& stem) {
  table[stem] = {nominative, accusative};
  table[stem + "e"] = {nominative, accusative};
  table[stem + "em"] = {dative};
  table[stem + "en"] = {accusative};
  table[stem + "er"] = {dative, genitive};
  table[stem + "es"] = {genitive};
}

}  // namespace

const std::map<std::string, CaseSet>& determiner_cases() {
  static const auto table = [] {
    std::map<std::string, CaseSet> t{
        {"der", {nominative, dative, genitive}},
        {"die", {nominative, accusative}},
        {"das", {nominative, accusative}},
        {"dem", {dative}},
        {"den", {accusative, dative}},
        {"des", {genitive}},
        {"dieser", {nominative, dative, genitive}},
        {"diese", {nominative, accusative}},
        {"dieses", {nominative, accusative, genitive}},
        {"diesem", {dative}},
        {"diesen", {accusative, dative}},
    };
    for (const char* stem : {"ein", "kein", "mein", "dein", "sein", "ihr", "unser"})
      add_ein_pattern(t, stem);
    // "euer" drops its e before endings.
    add_ein_pattern(t, "eur");
    t.erase("eur");
    t["euer"] = {nominative, accusative};
    return t;
  }();
  return table;
}

const std::set<std::string>& bare_possessives() {
  static const std::set<std::string> s{"mein", "dein", "sein", "ihr", "unser", "euer"};
  return s;
}

const std::map<std::string, CaseSet>& preposition_cases() {
  static const std::map<std::string, CaseSet> t{
      {"mit", {dative}},
      {"auf", {dative, accusative}},
      {"aus", {dative}},
      {"an", {dative, accusative}},
      {"nach", {dative}},
      {"in", {dative, accusative}},
      {"von", {dative}},
      {"bei", {dative}},
      {"zu", {dative}},
      {"für", {accusative}},
      {"durch", {accusative}},
      {"gegen", {accusative}},
      {"ohne", {accusative}},
      {"um", {accusative}},
      {"bis", {accusative}},
      {"über", {dative, accusative}},
      {"unter", {dative, accusative}},
      {"vor", {dative, accusative}},
      {"hinter", {dative, accusative}},
      {"neben", {dative, accusative}},
      {"zwischen", {dative, accusative}},
      {"seit", {dative}},
      {"ab", {dative}},
      {"gegenüber", {dative}},
      {"während", {genitive, dative}},
      {"wegen", {genitive, dative}},
      {"trotz", {genitive, dative}},
      {"als", CaseSet::all()},
  };
  return t;
}

const std::map<std::string, std::pair<std::string, Case>>& contractions() {
  static const std::map<std::string, std::pair<std::string, Case>> t{
      {"am", {"an", dative}},    {"im", {"in", dative}},  {"beim", {"bei", dative}},
      {"zum", {"zu", dative}},   {"zur", {"zu", dative}}, {"vom", {"von", dative}},
      {"ans", {"an", accusative}}, {"ins", {"in", accusative}},
  };
  return t;
}

const std::map<std::string, CaseSet>& pronoun_cases() {
  static const std::map<std::string, CaseSet> t{
      {"ich", {nominative}},  {"du", {nominative}},   {"er", {nominative}},
      {"wir", {nominative}},  {"man", {nominative}},  {"sie", {nominative, accusative}},
      {"es", {nominative, accusative}},               {"ihr", {nominative, dative}},
      {"mich", {accusative}}, {"dich", {accusative}}, {"ihn", {accusative}},
      {"mir", {dative}},      {"dir", {dative}},      {"ihm", {dative}},
      {"ihnen", {dative}},    {"uns", {accusative, dative}},
      {"euch", {accusative, dative}},                 {"sich", {accusative, dative}},
      {"jemand", {nominative, accusative}},           {"niemand", {nominative, accusative}},
  };
  return t;
}

const std::set<std::string>& reflexive_pronouns() {
  static const std::set<std::string> s{"sich", "mich", "dich", "uns", "euch"};
  return s;
}

const std::set<std::string>& conjunctions() {
  static const std::set<std::string> s{"und", "oder", "aber", "sondern", "denn", "sowie",
                                       "dass", "weil", "wenn", "ob", "sodass", "bzw."};
  return s;
}

const std::set<std::string>& cardinal_words() {
  static const std::set<std::string> s{"zwei", "drei", "vier", "fünf", "sechs", "sieben",
                                       "acht", "neun", "zehn", "elf", "zwölf", "zwanzig",
                                       "dreißig", "hundert", "tausend"};
  return s;
}

const std::set<std::string>& temporal_adverbs() {
  static const std::set<std::string> s{"heute", "gestern", "morgen", "damals", "dann",
                                       "danach", "zuvor", "nachts", "abends", "morgens",
                                       "später", "früher", "jetzt", "sofort", "nachfolgend",
                                       "anschließend", "bald", "vorher"};
  return s;
}

const std::set<std::string>& local_adverbs() {
  static const std::set<std::string> s{"dort", "hier", "da", "oben", "unten", "vorne",
                                       "hinten", "draußen", "drinnen", "daneben", "dahinter",
                                       "dorthin", "hierher", "links", "rechts"};
  return s;
}

const std::set<std::string>& closed_adverbs() {
  static const std::set<std::string> s = [] {
    std::set<std::string> all{"sehr",    "nicht",     "auch",      "noch",    "bereits",
                              "schon",   "hingegen",  "jedoch",    "frontal", "seitlich",
                              "zudem",   "außerdem",  "gerade",    "fast",    "etwa",
                              "insgesamt", "erneut",  "plötzlich", "dabei",   "davor",
                              "ebenfalls", "nur",     "wieder",    "vermutlich"};
    all.insert(temporal_adverbs().begin(), temporal_adverbs().end());
    all.insert(local_adverbs().begin(), local_adverbs().end());
    return all;
  }();
  return s;
}

bool has_adverb_suffix(std::string_view lower) {
  for (std::string_view suffix : {"lich", "weise", "wärts", "mals", "end"})
    if (lower.size() > suffix.size() + 2 && ends_with(lower, suffix)) return true;
  return false;
}

bool has_inflection_ending(std::string_view lower) {
  for (std::string_view suffix : {"e", "en", "er", "em", "es"})
    if (lower.size() > suffix.size() + 1 && ends_with(lower, suffix)) return true;
  return false;
}

}  // namespace vfe::detail
