#ifndef VFENRICH_TEXT_HPP
#define VFENRICH_TEXT_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vfe {

class Lexicon;

enum class Tag {
  determiner,
  adjective,
  noun,
  proper_noun,
  pronoun,
  preposition,
  contracted_preposition,
  verb_finite,
  verb_other,
  cardinal,
  conjunction,
  comma,
  sentence_final,
  adverb,
  other,
};

inline constexpr Tag kAllTags[] = {
    Tag::determiner, Tag::adjective,   Tag::noun,        Tag::proper_noun,
    Tag::pronoun,    Tag::preposition, Tag::contracted_preposition,
    Tag::verb_finite, Tag::verb_other, Tag::cardinal,    Tag::conjunction,
    Tag::comma,      Tag::sentence_final, Tag::adverb,   Tag::other,
};

std::string_view to_string(Tag t);
std::optional<Tag> tag_from_string(std::string_view s);

enum class NeClass {
  registration_number,
  licence_plate,
  date,
  person_name,
  vehicle_name,
  location_name,
};

std::string_view to_string(NeClass c);

/// Half-open byte range into the document text.
struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
  bool operator==(const CharSpan&) const = default;
};

struct Token {
  std::string surface;
  Tag pos = Tag::other;
  std::optional<std::string> lemma;
  std::optional<NeClass> ne_class;
  CharSpan span;
};

struct Sentence {
  std::string document;
  std::size_t index = 0;
  /// Sentence text; token spans are document offsets, `offset` is where
  /// `text` starts in the document.
  std::string text;
  std::size_t offset = 0;
  std::vector<Token> tokens;

  std::string id() const { return document + "#" + std::to_string(index); }
  /// Source text covered by tokens [first, last).
  std::string surface(std::size_t first, std::size_t last) const;
};

/// Gazetteers and abbreviation list. Configuration data, not code.
struct NeConfig {
  std::vector<std::string> abbreviations;
  std::vector<std::string> vehicles;
  std::vector<std::string> locations;
  std::vector<std::string> persons;

  static NeConfig defaults();
  /// JSON {abbreviations, vehicles, locations, persons}; missing keys keep
  /// their defaults.
  static NeConfig load(std::istream& in);
  static NeConfig load_file(const std::filesystem::path& path);
};

/// Sentence spans over `text`. Boundaries are '.', '!' or '?' followed by
/// whitespace and a capital letter, never inside an abbreviation or a span
/// the entity patterns claim first.
std::vector<CharSpan> split_sentences(std::string_view text, const NeConfig& cfg = NeConfig::defaults());

/// Whitespace tokenisation with trailing punctuation split off. `offset` is
/// added to every span so tokens can index the enclosing document.
std::vector<Token> tokenize(std::string_view sentence_text, std::size_t offset = 0,
                            const NeConfig& cfg = NeConfig::defaults());

/// Rule and lexicon tagger; total over its input.
std::vector<Token> tag_pos(std::vector<Token> tokens, const Lexicon& lex);

/// Merges entity spans into single tokens carrying ne_class. `text` starts
/// at document offset `offset`; token spans must fall inside it. With a
/// lexicon, vehicle makes absorb following unknown capitalised model names.
std::vector<Token> recognize_nes(std::vector<Token> tokens, std::string_view text,
                                 std::size_t offset, const NeConfig& cfg,
                                 const Lexicon* lex = nullptr);

/// Full raw-text preprocessing of one document.
std::vector<Sentence> preprocess_document(std::string_view text, const std::string& document_id,
                                          const Lexicon& lex, const NeConfig& cfg);

// Vertical format: surface<TAB>pos<TAB>lemma per line, '-' for no lemma,
// blank line between sentences.
std::vector<Sentence> read_pretagged(std::istream& in, const std::string& document_id);
void write_pretagged(std::ostream& out, const std::vector<Sentence>& sentences);
/// Pretagged sentences with entities recognised and verb lemmas completed.
std::vector<Sentence> preprocess_pretagged(std::istream& in, const std::string& document_id,
                                           const Lexicon& lex, const NeConfig& cfg);

}  // namespace vfe

#endif  // VFENRICH_TEXT_HPP
