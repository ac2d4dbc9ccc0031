#include "vfenrich/case.hpp"

#include "vfenrich/error.hpp"

namespace vfe {

CycleError::CycleError(std::vector<std::string> cycle)
    : Error([&] {
        std::string msg = "cyclic hypernymy:";
        for (const auto& id : cycle) msg += " " + id;
        return msg;
      }()),
      cycle_(std::move(cycle)) {}

std::string_view to_string(Case c) {
  switch (c) {
    case Case::nominative: return "nominative";
    case Case::genitive: return "genitive";
    case Case::dative: return "dative";
    case Case::accusative: return "accusative";
  }
  return "?";
}

std::string_view short_name(Case c) {
  switch (c) {
    case Case::nominative: return "nom";
    case Case::genitive: return "gen";
    case Case::dative: return "dat";
    case Case::accusative: return "acc";
  }
  return "?";
}

std::optional<Case> case_from_string(std::string_view s) {
  for (Case c : kAllCases)
    if (s == to_string(c) || s == short_name(c)) return c;
  return std::nullopt;
}

std::vector<Case> CaseSet::members() const {
  std::vector<Case> out;
  for (Case c : kAllCases)
    if (contains(c)) out.push_back(c);
  return out;
}

std::string CaseSet::to_string() const {
  if (empty()) return "-";
  std::string out;
  for (Case c : members()) {
    if (!out.empty()) out += ',';
    out += short_name(c);
  }
  return out;
}

}  // namespace vfe
