// Closed-class word tables shared by the tagger and the case assigner.
#ifndef VFENRICH_SRC_CLOSED_CLASS_HPP
#define VFENRICH_SRC_CLOSED_CLASS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "vfenrich/case.hpp"

namespace vfe::detail {

/// Determiner form -> case set, gender and number folded in. Possessive and
/// "kein" forms follow the "ein" pattern by suffix.
const std::map<std::string, CaseSet>& determiner_cases();
/// Possessive stems without an ending ("sein", "ihr", ...); context decides.
const std::set<std::string>& bare_possessives();
const std::map<std::string, CaseSet>& preposition_cases();
const std::map<std::string, std::pair<std::string, Case>>& contractions();
const std::map<std::string, CaseSet>& pronoun_cases();
const std::set<std::string>& reflexive_pronouns();
const std::set<std::string>& conjunctions();
const std::set<std::string>& cardinal_words();
const std::set<std::string>& closed_adverbs();
const std::set<std::string>& temporal_adverbs();
const std::set<std::string>& local_adverbs();
bool has_adverb_suffix(std::string_view lower);
bool has_inflection_ending(std::string_view lower);

}  // namespace vfe::detail

#endif
