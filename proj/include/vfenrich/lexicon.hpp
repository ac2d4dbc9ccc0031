#ifndef VFENRICH_LEXICON_HPP
#define VFENRICH_LEXICON_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vfe {

enum class PartOfSpeech { noun, verb, adjective };

std::string_view to_string(PartOfSpeech pos);
std::optional<PartOfSpeech> pos_from_string(std::string_view s);

struct Synset {
  std::string id;
  PartOfSpeech pos = PartOfSpeech::noun;
  std::vector<std::string> lemmas;
  std::vector<std::string> hypernyms;
  /// Category label attached in the source document (mandatory on roots).
  std::optional<std::string> label;
  /// Effective category: the nearest label on the first-edge hypernym path.
  std::string category;
};

struct VerbEntry {
  std::string lemma;
  std::vector<std::string> forms;  // always contains lemma
  std::vector<std::string> frames;
};

/// Immutable wordnet-style resource: synsets with hypernymy, category labels
/// and verb frame strings. Construction validates every invariant, so a
/// Lexicon value is always internally consistent.
class Lexicon {
 public:
  Lexicon() = default;

  static Lexicon load(std::istream& in);
  static Lexicon load(std::string_view document);
  static Lexicon load_file(const std::filesystem::path& path);
  static Lexicon from_parts(std::vector<Synset> synsets, std::vector<VerbEntry> verbs);

  const std::map<std::string, Synset>& synsets() const { return synsets_; }
  const std::map<std::string, VerbEntry>& verbs() const { return verbs_; }

  bool contains(std::string_view id) const;
  /// Throws LookupError for unknown ids.
  const Synset& synset(std::string_view id) const;

  /// Exact match first; when nothing matches, falls back to a
  /// case-insensitive comparison. Unknown lemmas yield an empty list.
  std::vector<const Synset*> lookup_synsets(std::string_view lemma, PartOfSpeech pos) const;
  bool has_noun(std::string_view lemma) const;

  /// id first, root last, following the first-listed hypernym at each step.
  std::vector<std::string> hypernym_path(std::string_view id) const;
  /// Category labels met on the first-edge path, nearest first.
  std::vector<std::string> path_labels(std::string_view id) const;
  /// All ancestors via every hypernym edge, including id itself.
  std::vector<std::string> ancestors(std::string_view id) const;
  /// Length of the longest hypernym chain from id to a root (roots are 0).
  std::size_t depth(std::string_view id) const;

  /// Deepest synset shared by the full ancestor sets of all ids; ties go to
  /// the smallest id. Throws ContractViolation on mixed part of speech,
  /// LookupError on unknown ids.
  std::optional<std::string> lowest_common_hypernym(std::span<const std::string> ids) const;

  /// Synset carrying `category` as its own label (smallest id wins).
  std::optional<std::string> designated_synset(std::string_view category) const;

  std::vector<std::string> verb_frames(std::string_view lemma) const;
  const VerbEntry* verb(std::string_view lemma) const;
  /// Verb lemma for an inflected surface form; exact, then lowercased.
  std::optional<std::string> verb_for_form(std::string_view form) const;

 private:
  void build_indexes();

  std::map<std::string, Synset> synsets_;
  std::map<std::string, VerbEntry> verbs_;
  std::map<std::pair<std::string, PartOfSpeech>, std::vector<std::string>> lemma_index_;
  std::map<std::pair<std::string, PartOfSpeech>, std::vector<std::string>> folded_index_;
  std::map<std::string, std::string> form_index_;
  std::map<std::string, std::size_t> depth_;
};

}  // namespace vfe

#endif  // VFENRICH_LEXICON_HPP
