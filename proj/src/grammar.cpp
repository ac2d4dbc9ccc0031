#include <fstream>
#include <set>
#include <sstream>

#include "closed_class.hpp"
#include "strings.hpp"
#include "vfenrich/chunker.hpp"
#include "vfenrich/error.hpp"

namespace vfe {

std::vector<GrammarRule> default_grammar() {
  return {
      {"ADJS", {"adjective"}},
      {"ADJS", {"adjective", "ADJS"}},
      {"N", {"noun"}},
      {"N", {"proper-noun"}},
      {"NP", {"determiner", "N"}},
      {"NP", {"determiner", "ADJS", "N"}},
      {"NP", {"ADJS", "N"}},
      {"NP", {"N"}},
      {"NP", {"pronoun"}},
      {"NP", {"cardinal", "N"}},
      {"NP", {"NP", "proper-noun"}},
      {"PP", {"preposition", "NP"}},
      {"PP", {"contracted-preposition", "N"}},
      {"PP", {"contracted-preposition", "ADJS", "N"}},
  };
}

bool Grammar::is_terminal(std::string_view symbol) { return tag_from_string(symbol).has_value(); }

Grammar::Grammar(std::vector<GrammarRule> rules) : rules_(std::move(rules)) {
  std::set<std::string> lhs;
  for (const auto& r : rules_) {
    if (r.rhs.empty()) throw Error("grammar: rule for '" + r.lhs + "' has an empty right-hand side");
    if (is_terminal(r.lhs)) throw Error("grammar: tag '" + r.lhs + "' used as left-hand side");
    lhs.insert(r.lhs);
  }
  for (const char* required : {"NP", "PP"})
    if (!lhs.count(required)) throw Error(std::string("grammar: no rule for ") + required);
  for (const auto& r : rules_)
    for (const auto& sym : r.rhs)
      if (!is_terminal(sym) && !lhs.count(sym))
        throw Error("grammar: undefined symbol '" + sym + "' in rule for '" + r.lhs + "'");
}

Grammar Grammar::defaults() { return Grammar(default_grammar()); }

Grammar Grammar::parse(std::istream& in) {
  std::vector<GrammarRule> rules;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto words = detail::split_ws(line);
    if (words.empty()) continue;
    if (words.size() < 3 || words[1] != "->")
      throw ParseError("grammar: expected 'LHS -> symbols' at line " + std::to_string(lineno),
                       lineno, 1);
    rules.push_back({words[0], {words.begin() + 2, words.end()}});
  }
  try {
    return Grammar(std::move(rules));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

Grammar Grammar::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open grammar '" + path.string() + "'");
  return parse(in);
}

CaseTables CaseTables::defaults() {
  CaseTables t;
  t.determiners = detail::determiner_cases();
  t.prepositions = detail::preposition_cases();
  t.pronouns = detail::pronoun_cases();
  t.contractions = detail::contractions();
  return t;
}

CaseSet CaseTables::governed(std::string_view preposition) const {
  auto it = prepositions.find(std::string(preposition));
  return it == prepositions.end() ? CaseSet::all() : it->second;
}

}  // namespace vfe
