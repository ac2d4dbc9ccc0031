#ifndef VFENRICH_CHUNKER_HPP
#define VFENRICH_CHUNKER_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vfenrich/case.hpp"
#include "vfenrich/text.hpp"

namespace vfe {

struct GrammarRule {
  std::string lhs;
  std::vector<std::string> rhs;
  bool operator==(const GrammarRule&) const = default;
};

/// Context-free chunk grammar. Terminals are tag names ("determiner",
/// "noun", ...); every other symbol must appear as a left-hand side.
class Grammar {
 public:
  explicit Grammar(std::vector<GrammarRule> rules);

  static Grammar defaults();
  /// One rule per line, "LHS -> sym sym ...", '#' starts a comment.
  static Grammar parse(std::istream& in);
  static Grammar load_file(const std::filesystem::path& path);

  const std::vector<GrammarRule>& rules() const { return rules_; }
  static bool is_terminal(std::string_view symbol);

 private:
  std::vector<GrammarRule> rules_;
};

/// The built-in grammar rules (at most 15).
std::vector<GrammarRule> default_grammar();

/// Morphological case tables. Prepositions may be extended at runtime.
struct CaseTables {
  std::map<std::string, CaseSet> determiners;
  std::map<std::string, CaseSet> prepositions;
  std::map<std::string, CaseSet> pronouns;
  std::map<std::string, std::pair<std::string, Case>> contractions;

  static CaseTables defaults();
  /// Governed cases of a preposition lemma; all four when unlisted.
  CaseSet governed(std::string_view preposition) const;
};

enum class ChunkKind { np, pp };
std::string_view to_string(ChunkKind k);

/// Half-open token index range.
struct TokenRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
  bool contains(std::size_t i) const { return i >= begin && i < end; }
  bool contains(const TokenRange& o) const { return o.begin >= begin && o.end <= end; }
  bool overlaps(const TokenRange& o) const { return begin < o.end && o.begin < end; }
  auto operator<=>(const TokenRange&) const = default;
};

struct Chunk {
  ChunkKind kind = ChunkKind::np;
  TokenRange span;
  std::size_t head_index = 0;
  CaseSet case_set;
  std::optional<std::string> preposition;  // PP only, contractions expanded
  std::optional<std::string> determiner;
  // Copied from the sentence so a chunk can travel on its own.
  std::string surface;
  std::string head_lemma;
  Tag head_pos = Tag::noun;
  std::optional<NeClass> head_ne;
  std::optional<NeClass> apposition_ne;  // first NE after the head, e.g. "Der Halter G 1234/11"

  /// Chunks are identified by kind and span.
  bool same_as(const Chunk& o) const { return kind == o.kind && span == o.span; }
};

struct Covering {
  std::vector<Chunk> chunks;          // sorted, pairwise disjoint
  std::vector<std::size_t> unparsed;  // token indices outside every chunk

  std::size_t covered_tokens() const;
};

struct ChartResult {
  /// Every NP/PP edge the chart derived, sorted by (begin, end, kind).
  std::vector<Chunk> chunks;
  /// Maximal coverings, best first. Never empty.
  std::vector<Covering> coverings;
  bool truncated = false;
};

struct ChunkerOptions {
  std::size_t max_coverings = 4096;
};

/// Bottom-up chart parse of the sentence's tag sequence.
ChartResult parse_chunks(const Sentence& s, const Grammar& g,
                         const CaseTables& tables = CaseTables::defaults(),
                         const ChunkerOptions& options = {});

/// Case set for a candidate NP/PP span; empty means the phrase is rejected.
CaseSet chunk_case_set(ChunkKind kind, TokenRange span, const Sentence& s,
                       const CaseTables& tables);

/// Fills case_set; throws CaseClashError when the intersection is empty.
Chunk assign_case(Chunk c, const Sentence& s, const CaseTables& tables = CaseTables::defaults());

/// Throws ContractViolation unless t is one of the eight known contractions.
std::pair<std::string, Case> expand_contraction(const Token& t);

/// Builds the full chunk record (head, surface, preposition, case) for a span
/// with a known head token.
Chunk make_chunk(ChunkKind kind, TokenRange span, std::size_t head, const Sentence& s,
                 const CaseTables& tables);

}  // namespace vfe

#endif  // VFENRICH_CHUNKER_HPP
