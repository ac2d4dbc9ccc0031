#include "vfenrich/frame.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "vfenrich/error.hpp"

namespace vfe {

std::string_view to_string(PhraseKind k) {
  switch (k) {
    case PhraseKind::noun_phrase: return "noun-phrase";
    case PhraseKind::prepositional_phrase: return "prepositional-phrase";
    case PhraseKind::adverbial_or_pp: return "adverbial-or-pp";
    case PhraseKind::infinitive_clause: return "infinitive-clause";
    case PhraseKind::reflexive: return "reflexive";
    case PhraseKind::expletive: return "expletive";
  }
  return "?";
}

std::string_view to_string(SemanticRestriction r) {
  switch (r) {
    case SemanticRestriction::none: return "none";
    case SemanticRestriction::local: return "local";
    case SemanticRestriction::temporal: return "temporal";
    case SemanticRestriction::manner: return "manner";
  }
  return "?";
}

namespace {

struct CodeRow {
  std::string_view code;
  PhraseKind kind;
  std::optional<Case> required_case;
  SemanticRestriction restriction;
};

constexpr std::array<CodeRow, 12> kCodeTable{{
    {"NN", PhraseKind::noun_phrase, Case::nominative, SemanticRestriction::none},
    {"AN", PhraseKind::noun_phrase, Case::accusative, SemanticRestriction::none},
    {"DN", PhraseKind::noun_phrase, Case::dative, SemanticRestriction::none},
    {"GN", PhraseKind::noun_phrase, Case::genitive, SemanticRestriction::none},
    {"PP", PhraseKind::prepositional_phrase, std::nullopt, SemanticRestriction::none},
    {"BM", PhraseKind::adverbial_or_pp, std::nullopt, SemanticRestriction::manner},
    {"BL", PhraseKind::adverbial_or_pp, std::nullopt, SemanticRestriction::local},
    {"BT", PhraseKind::adverbial_or_pp, std::nullopt, SemanticRestriction::temporal},
    {"BD", PhraseKind::adverbial_or_pp, std::nullopt, SemanticRestriction::none},
    {"AR", PhraseKind::reflexive, Case::accusative, SemanticRestriction::none},
    {"AZ", PhraseKind::infinitive_clause, std::nullopt, SemanticRestriction::none},
    {"NE", PhraseKind::expletive, std::nullopt, SemanticRestriction::none},
}};

std::string base_code(std::string_view code) {
  std::string base(code);
  if (base.size() == 2) base[1] = static_cast<char>(std::toupper(static_cast<unsigned char>(base[1])));
  return base;
}

}  // namespace

ComplementCode code_properties(std::string_view code) {
  if (code.size() != 2 || !std::isupper(static_cast<unsigned char>(code[0])) ||
      !std::isalpha(static_cast<unsigned char>(code[1])))
    throw UnknownCodeError(std::string(code));
  const bool optional = std::islower(static_cast<unsigned char>(code[1]));
  const std::string base = base_code(code);
  for (const auto& row : kCodeTable) {
    if (row.code != base) continue;
    ComplementCode c;
    c.code = std::string(code);
    c.phrase_kind = row.kind;
    c.required_case = row.required_case;
    c.optional = optional;
    c.restriction = row.restriction;
    return c;
  }
  throw UnknownCodeError(std::string(code));
}

bool FramePattern::has_code(std::string_view code) const {
  return std::any_of(elements.begin(), elements.end(),
                     [&](const ComplementCode& c) { return base_code(c.code) == base_code(code); });
}

FramePattern parse_frame(std::string_view raw) {
  if (raw.empty()) throw FrameSyntaxError("empty frame string");
  FramePattern p;
  p.raw = std::string(raw);
  std::size_t start = 0;
  while (true) {
    std::size_t dot = raw.find('.', start);
    std::string_view token = raw.substr(start, dot == std::string_view::npos ? raw.npos : dot - start);
    if (token.empty())
      throw FrameSyntaxError("empty segment in frame '" + std::string(raw) + "'");
    ComplementCode c = code_properties(token);
    if (p.has_code(c.code))
      throw FrameSyntaxError("repeated code '" + c.code + "' in frame '" + std::string(raw) + "'");
    p.elements.push_back(std::move(c));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return p;
}

std::string format_frame(const FramePattern& pattern) {
  std::string out;
  for (const auto& e : pattern.elements) {
    if (!out.empty()) out += '.';
    out += e.code;
  }
  return out;
}

}  // namespace vfe
