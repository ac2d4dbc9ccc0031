#ifndef VFENRICH_ENRICH_HPP
#define VFENRICH_ENRICH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vfenrich/case.hpp"
#include "vfenrich/chunker.hpp"
#include "vfenrich/frame.hpp"
#include "vfenrich/lexicon.hpp"
#include "vfenrich/matcher.hpp"
#include "vfenrich/semantics.hpp"

namespace vfe {

struct PrepositionStats {
  std::string verb_lemma;
  std::map<std::string, std::size_t> counts;
  /// Per preposition, how often each case appeared in the case sets of the
  /// counted PPs.
  std::map<std::string, std::map<Case, std::size_t>> case_counts;
  std::size_t total_occurrences = 0;

  std::size_t total() const;
  /// Associative and commutative; partial stats may be folded in any order.
  void merge(const PrepositionStats& other);
};

struct AdjunctVerdict {
  bool adjunct = false;
  bool resolved = true;
  std::string category{kUnknownCategory};
};

AdjunctVerdict classify_adjunct(const Chunk& pp, const FramePattern& pattern, const Lexicon& lex);
/// Local or temporal PP that the pattern has no BL/BT slot for.
bool is_adjunct_pp(const Chunk& pp, const FramePattern& pattern, const Lexicon& lex);

/// Counts each in-scope PP once per verb occurrence, however many
/// assignments or coverings mention it. Unresolvable PP heads are kept and
/// reported through `warnings` when given.
PrepositionStats count_prepositions(std::span<const CandidateAssignment> assignments,
                                    const FramePattern& pattern, const Lexicon& lex, bool filter,
                                    std::vector<std::string>* warnings = nullptr);

struct DominantPreposition {
  std::string preposition;
  Case case_ = Case::dative;
  std::size_t count = 0;
  /// Every preposition sharing the maximum, sorted; empty when unique.
  std::vector<std::string> ties;
};

std::optional<DominantPreposition> select_dominant_preposition(
    const PrepositionStats& stats, const CaseTables& tables = CaseTables::defaults());

struct FillerObservation {
  std::size_t element_position = 0;
  std::string surface;
  FillerKind kind = FillerKind::common_noun;
  std::optional<NeClass> ne;
  std::optional<std::string> synset;
  /// Synset that stands in for the filler during generalization.
  std::optional<std::string> anchor;
  std::string category{kUnknownCategory};
  std::string sentence_id;
};

/// nullopt for unfilled slots.
std::optional<FillerObservation> classify_filler(const Binding& binding, std::size_t position,
                                                 const Lexicon& lex);

struct SemanticProfile {
  std::map<std::string, std::size_t> per_category;
  std::optional<std::string> generalization;
  std::size_t observations() const;
};

SemanticProfile generalize_categories(std::span<const FillerObservation> obs, const Lexicon& lex);

struct EnrichedElement {
  std::string code;
  std::string phrase_form;
  std::optional<std::string> preposition;
  std::optional<Case> case_;
  SemanticProfile profile;
  std::vector<std::string> fillers;
  std::size_t evidence = 0;
  bool sufficient = false;
};

struct EnrichedFrame {
  std::string verb_lemma;
  std::optional<FramePattern> pattern;
  std::vector<std::string> frames_considered;
  std::vector<EnrichedElement> elements;
  std::size_t occurrences_examined = 0;
  std::size_t occurrences_matched = 0;
  PrepositionStats stats;
  std::optional<DominantPreposition> dominant;
  std::vector<std::string> warnings;
};

struct EnrichOptions {
  bool adjunct_filter = true;
  std::size_t min_evidence = 1;
};

/// Fillers per element, one per matched occurrence. NP and adverbial slots
/// use the best assignment; PP slots use the best assignment whose PP is
/// headed by `preposition` (and is no filtered adjunct).
std::vector<std::vector<FillerObservation>> collect_fillers(
    std::span<const OccurrenceMatch> matches, const FramePattern& pattern, const Lexicon& lex,
    const std::optional<std::string>& preposition, bool filter);

EnrichedFrame build_enriched_frame(std::string_view verb, const FramePattern& pattern,
                                   const PrepositionStats& stats,
                                   const std::optional<DominantPreposition>& dominant,
                                   std::span<const std::vector<FillerObservation>> fillers,
                                   std::size_t occurrences, const Lexicon& lex,
                                   const EnrichOptions& options = {});

/// count -> select -> collect -> assemble for one pattern.
EnrichedFrame enrich_pattern(std::string_view verb, const FramePattern& pattern,
                             std::span<const OccurrenceMatch> matches, std::size_t occurrences,
                             const Lexicon& lex, const CaseTables& tables,
                             const EnrichOptions& options = {});

}  // namespace vfe

#endif  // VFENRICH_ENRICH_HPP
