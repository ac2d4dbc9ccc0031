#ifndef VFENRICH_SEMANTICS_HPP
#define VFENRICH_SEMANTICS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vfenrich/chunker.hpp"
#include "vfenrich/lexicon.hpp"
#include "vfenrich/text.hpp"

namespace vfe {

inline constexpr std::string_view kUnknownCategory = "unknown";

enum class FillerKind { common_noun, pronoun, named_entity };
std::string_view to_string(FillerKind k);

/// Shallow semantic class of a chunk head.
struct HeadClass {
  FillerKind kind = FillerKind::common_noun;
  std::optional<NeClass> ne;
  std::optional<std::string> synset;      // lexicon hit for common nouns
  std::optional<std::string> designated;  // category stand-in for names and pronouns
  std::string category{kUnknownCategory};
  /// Category labels from the head up to its root; used for local/temporal tests.
  std::vector<std::string> labels;
  bool resolved = false;

  bool has_label(std::string_view label) const;
};

/// registration-number/person-name -> person, vehicle-name/licence-plate ->
/// vehicle, location-name -> location, date -> time.
std::string_view ne_category(NeClass c);

/// Surface form first, then stripped plural/case endings with umlaut
/// reversal ("Gegenständen" -> "Gegenstand").
std::vector<std::string> noun_lemma_candidates(std::string_view surface);

/// First noun synset reachable from the surface via noun_lemma_candidates.
const Synset* resolve_noun(std::string_view surface, const Lexicon& lex);

HeadClass classify_head(const Chunk& c, const Lexicon& lex);

}  // namespace vfe

#endif  // VFENRICH_SEMANTICS_HPP
