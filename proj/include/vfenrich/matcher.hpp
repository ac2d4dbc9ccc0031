#ifndef VFENRICH_MATCHER_HPP
#define VFENRICH_MATCHER_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vfenrich/chunker.hpp"
#include "vfenrich/frame.hpp"
#include "vfenrich/lexicon.hpp"
#include "vfenrich/text.hpp"

namespace vfe {

/// A target verb token: sentence index within the searched list, token index.
struct Occurrence {
  std::size_t sentence = 0;
  std::size_t token = 0;
  auto operator<=>(const Occurrence&) const = default;
};

std::vector<Occurrence> find_verb_occurrences(std::span<const Sentence> sentences,
                                              std::string_view lemma, const Lexicon& lex);

struct ClauseSegment {
  TokenRange span;
  std::optional<std::size_t> verb_index;
  /// The boundary right before this segment is the conjunction "und".
  bool after_conjunction = false;
};

/// Cuts at commas and at clause-level "und"; an "und" inside one of
/// `chunks` is not a boundary. Boundary tokens belong to no segment.
std::vector<ClauseSegment> split_clauses(const Sentence& s,
                                         std::optional<std::size_t> verb_index = std::nullopt,
                                         std::span<const Chunk> chunks = {});

/// PP chunks among the `window` nearest chunks on each side of the verb
/// inside the segment, as indices into covering.chunks. Nearest first; at
/// equal distance the following chunk comes first.
std::vector<std::size_t> select_in_scope_pps(const ClauseSegment& seg, const Covering& covering,
                                             std::size_t verb_index, std::size_t window);

struct ChunkRef {
  std::size_t index = 0;  // into the covering the assignment came from
  Chunk chunk;
};

struct TokenRef {
  TokenRange tokens;
  std::string surface;
};

struct Unfilled {};

using Binding = std::variant<Unfilled, ChunkRef, TokenRef>;

struct CandidateAssignment {
  std::string verb_lemma;
  Occurrence occurrence;
  std::string sentence_id;
  FramePattern pattern;
  std::vector<Binding> bindings;  // parallel to pattern.elements
  std::size_t covering_id = 0;
  std::vector<Chunk> in_scope_pps;
  /// Subject taken from the preceding "und"-conjunct.
  bool borrowed_subject = false;
};

struct MatchOptions {
  std::size_t window = 1;
  std::size_t max_assignments = 256;
};

/// Where in a sentence a frame is matched.
struct MatchSite {
  const Sentence* sentence = nullptr;
  std::span<const ClauseSegment> segments;
  std::size_t segment = 0;
  std::size_t verb_index = 0;
  Occurrence occurrence;
  std::string verb_lemma;
};

/// Every maximal consistent binding of the pattern's elements, best first.
/// Empty when some required element cannot be bound.
std::vector<CandidateAssignment> match_frame(const FramePattern& pattern, const MatchSite& site,
                                             const Covering& covering, std::size_t covering_id,
                                             const Lexicon& lex, const MatchOptions& options = {});

/// Coverings that admit at least one assignment, order preserved.
std::vector<Covering> filter_coverings(std::span<const Covering> coverings,
                                       const FramePattern& pattern, const MatchSite& site,
                                       const Lexicon& lex, const MatchOptions& options = {});

/// Checks the binding invariants of an assignment. Returns a description of
/// the first violation, or nullopt.
std::optional<std::string> check_assignment(const CandidateAssignment& a, const Covering& covering);

struct OccurrenceMatch {
  Occurrence occurrence;
  std::string sentence_id;
  std::vector<ClauseSegment> segments;
  std::size_t segment = 0;
  std::vector<CandidateAssignment> assignments;  // deduplicated, best first
  std::size_t coverings_total = 0;
  std::size_t coverings_kept = 0;
};

/// Matches one occurrence against every covering of its sentence.
OccurrenceMatch match_occurrence(const Sentence& s, const ChartResult& chart,
                                 const Occurrence& occ, std::string_view verb_lemma,
                                 const FramePattern& pattern, const Lexicon& lex,
                                 const MatchOptions& options = {});

}  // namespace vfe

#endif  // VFENRICH_MATCHER_HPP
