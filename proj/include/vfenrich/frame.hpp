#ifndef VFENRICH_FRAME_HPP
#define VFENRICH_FRAME_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vfenrich/case.hpp"

namespace vfe {

enum class PhraseKind {
  noun_phrase,
  prepositional_phrase,
  adverbial_or_pp,
  infinitive_clause,
  reflexive,
  expletive,
};

enum class SemanticRestriction { none, local, temporal, manner };

std::string_view to_string(PhraseKind k);
std::string_view to_string(SemanticRestriction r);

/// One slot of a verb frame, e.g. NN (nominative NP) or Pp (optional PP).
struct ComplementCode {
  std::string code;
  PhraseKind phrase_kind = PhraseKind::noun_phrase;
  std::optional<Case> required_case;
  bool optional = false;
  SemanticRestriction restriction = SemanticRestriction::none;

  bool is_noun_phrase() const { return phrase_kind == PhraseKind::noun_phrase; }
  bool is_pp() const { return phrase_kind == PhraseKind::prepositional_phrase; }
  bool operator==(const ComplementCode&) const = default;
};

struct FramePattern {
  std::string raw;
  std::vector<ComplementCode> elements;

  bool has_code(std::string_view base_code) const;
  bool operator==(const FramePattern&) const = default;
};

/// Attribute record for a code token. A lowercase second letter marks the
/// optional variant of any two-letter code ("Pp" is the optional "PP").
/// Throws UnknownCodeError for tokens outside the code table.
ComplementCode code_properties(std::string_view code);

/// Splits on '.' and maps every token through code_properties.
/// Throws FrameSyntaxError on empty input, empty segments or repeated codes.
FramePattern parse_frame(std::string_view raw);

std::string format_frame(const FramePattern& pattern);

}  // namespace vfe

#endif  // VFENRICH_FRAME_HPP
