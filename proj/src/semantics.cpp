#include "vfenrich/semantics.hpp"

#include <algorithm>

#include "strings.hpp"

namespace vfe {

std::string_view to_string(FillerKind k) {
  switch (k) {
    case FillerKind::common_noun: return "common-noun";
    case FillerKind::pronoun: return "pronoun";
    case FillerKind::named_entity: return "ne";
  }
  return "?";
}

bool HeadClass::has_label(std::string_view label) const {
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

std::string_view ne_category(NeClass c) {
  switch (c) {
    case NeClass::registration_number:
    case NeClass::person_name: return "person";
    case NeClass::vehicle_name:
    case NeClass::licence_plate: return "vehicle";
    case NeClass::location_name: return "location";
    case NeClass::date: return "time";
  }
  return kUnknownCategory;
}

namespace {

std::string without_umlaut(std::string s) {
  // Reverse the last umlaut only; plural umlaut sits in the stem's last vowel.
  for (std::size_t i = s.size(); i-- > 1;) {
    if (static_cast<unsigned char>(s[i - 1]) != 0xC3) continue;
    char plain = 0;
    switch (static_cast<unsigned char>(s[i])) {
      case 0xA4: plain = 'a'; break;
      case 0xB6: plain = 'o'; break;
      case 0xBC: plain = 'u'; break;
    }
    if (plain) {
      s.replace(i - 1, 2, 1, plain);
      return s;
    }
  }
  return s;
}

}  // namespace

std::vector<std::string> noun_lemma_candidates(std::string_view surface) {
  std::vector<std::string> out{std::string(surface)};
  auto add = [&](std::string s) {
    if (s.size() > 1 && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  };
  for (std::string_view suffix : {"en", "n", "e", "s", "es", "er", "ern"}) {
    if (!detail::ends_with(surface, suffix) || surface.size() <= suffix.size() + 1) continue;
    std::string stem(surface.substr(0, surface.size() - suffix.size()));
    add(stem);
    add(without_umlaut(stem));
  }
  add(without_umlaut(std::string(surface)));
  return out;
}

const Synset* resolve_noun(std::string_view surface, const Lexicon& lex) {
  for (const auto& cand : noun_lemma_candidates(surface)) {
    auto hits = lex.lookup_synsets(cand, PartOfSpeech::noun);
    if (!hits.empty()) return hits.front();
  }
  return nullptr;
}

HeadClass classify_head(const Chunk& c, const Lexicon& lex) {
  HeadClass h;
  auto from_category = [&](std::string_view category) {
    h.category = std::string(category);
    h.resolved = true;
    h.labels = {h.category};
    if (auto id = lex.designated_synset(category)) {
      h.designated = *id;
      for (auto& l : lex.path_labels(*id))
        if (!h.has_label(l)) h.labels.push_back(l);
    }
  };
  if (c.head_ne) {
    h.kind = FillerKind::named_entity;
    h.ne = c.head_ne;
    from_category(ne_category(*c.head_ne));
    return h;
  }
  if (c.head_pos == Tag::pronoun) {
    h.kind = FillerKind::pronoun;
    from_category("person");
    return h;
  }
  h.kind = FillerKind::common_noun;
  if (const Synset* s = resolve_noun(c.head_lemma, lex)) {
    h.synset = s->id;
    h.category = s->category;
    h.labels = lex.path_labels(s->id);
    h.resolved = true;
  } else if (c.apposition_ne) {
    h.kind = FillerKind::named_entity;
    h.ne = c.apposition_ne;
    from_category(ne_category(*c.apposition_ne));
  }
  return h;
}

}  // namespace vfe
