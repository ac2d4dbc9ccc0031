#include "vfenrich/text.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

#include "closed_class.hpp"
#include "named_entities.hpp"
#include "strings.hpp"
#include "vfenrich/lexicon.hpp"

namespace vfe {

namespace {

constexpr std::string_view kTagNames[] = {
    "determiner", "adjective",   "noun",       "proper-noun", "pronoun",
    "preposition", "contracted-preposition", "verb-finite", "verb-other",
    "cardinal",   "conjunction", "comma",      "sentence-final", "adverb", "other",
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }
bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

bool is_punct_only(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::ispunct(static_cast<unsigned char>(c));
  });
}

bool is_abbreviation(std::string_view word, const NeConfig& cfg) {
  return std::find(cfg.abbreviations.begin(), cfg.abbreviations.end(), word) !=
         cfg.abbreviations.end();
}

}  // namespace

std::string_view to_string(Tag t) { return kTagNames[static_cast<int>(t)]; }

std::optional<Tag> tag_from_string(std::string_view s) {
  for (Tag t : kAllTags)
    if (to_string(t) == s) return t;
  return std::nullopt;
}

std::string Sentence::surface(std::size_t first, std::size_t last) const {
  if (first >= last || last > tokens.size()) return {};
  std::size_t b = tokens[first].span.begin - offset;
  std::size_t e = tokens[last - 1].span.end - offset;
  return text.substr(b, e - b);
}

std::vector<CharSpan> split_sentences(std::string_view text, const NeConfig& cfg) {
  std::vector<CharSpan> out;
  const auto protected_spans = detail::entity_spans(text, cfg);
  auto is_protected = [&](std::size_t pos) {
    return std::any_of(protected_spans.begin(), protected_spans.end(),
                       [&](const CharSpan& s) { return pos >= s.begin && pos < s.end; });
  };

  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    while (start < end && is_space(text[start])) ++start;
    std::size_t e = end;
    while (e > start && is_space(text[e - 1])) --e;
    if (e > start) out.push_back({start, e});
    start = end;
  };

  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_terminator(text[i])) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && is_terminator(text[end])) ++end;
    std::size_t next = end;
    while (next < text.size() && is_space(text[next])) ++next;
    const bool boundary =
        next > end && next < text.size() && detail::is_capitalized(text.substr(next));
    if (boundary && !is_protected(i)) {
      std::size_t word_begin = i;
      while (word_begin > start && !is_space(text[word_begin - 1])) --word_begin;
      std::string_view word = text.substr(word_begin, end - word_begin);
      if (!is_abbreviation(word, cfg)) emit(end);
    }
    i = end;
  }
  emit(text.size());
  return out;
}

std::vector<Token> tokenize(std::string_view sentence_text, std::size_t offset,
                            const NeConfig& cfg) {
  static constexpr std::string_view kLeading = "(\"'[";
  static constexpr std::string_view kTrailing = ".,;:!?)\"']";
  std::vector<Token> out;
  auto push = [&](std::size_t b, std::size_t e) {
    Token t;
    t.surface = std::string(sentence_text.substr(b, e - b));
    t.span = {offset + b, offset + e};
    out.push_back(std::move(t));
  };

  std::size_t i = 0;
  while (i < sentence_text.size()) {
    while (i < sentence_text.size() && is_space(sentence_text[i])) ++i;
    std::size_t j = i;
    while (j < sentence_text.size() && !is_space(sentence_text[j])) ++j;
    if (j == i) break;
    std::size_t b = i, e = j;
    i = j;

    while (e - b > 1 && kLeading.find(sentence_text[b]) != std::string_view::npos) {
      push(b, b + 1);
      ++b;
    }
    std::string_view word = sentence_text.substr(b, e - b);
    if (is_punct_only(word) || is_abbreviation(word, cfg)) {
      push(b, e);
      continue;
    }
    std::vector<std::pair<std::size_t, std::size_t>> tail;
    while (e > b + 1 && kTrailing.find(sentence_text[e - 1]) != std::string_view::npos) {
      std::size_t p = e - 1;
      // A run of dots stays one token ("...").
      if (sentence_text[p] == '.')
        while (p > b + 1 && sentence_text[p - 1] == '.') --p;
      tail.emplace_back(p, e);
      e = p;
    }
    push(b, e);
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) push(it->first, it->second);
  }
  return out;
}

namespace {

bool is_cardinal_surface(std::string_view s) {
  static const std::regex re(R"([0-9][0-9.,/]*)");
  return std::regex_match(s.begin(), s.end(), re) && s.back() != '.';
}

std::optional<Tag> closed_class_tag(const std::string& lower) {
  if (detail::contractions().count(lower)) return Tag::contracted_preposition;
  if (detail::preposition_cases().count(lower)) return Tag::preposition;
  if (detail::bare_possessives().count(lower)) return std::nullopt;  // contextual
  if (detail::determiner_cases().count(lower)) return Tag::determiner;
  if (detail::pronoun_cases().count(lower)) return Tag::pronoun;
  if (detail::conjunctions().count(lower)) return Tag::conjunction;
  if (detail::cardinal_words().count(lower)) return Tag::cardinal;
  if (detail::closed_adverbs().count(lower)) return Tag::adverb;
  return std::nullopt;
}

bool is_nominal(Tag t) { return t == Tag::noun || t == Tag::proper_noun || t == Tag::adjective; }

}  // namespace

std::vector<Token> tag_pos(std::vector<Token> tokens, const Lexicon& lex) {
  enum class Origin { fixed, possessive, lowercase_open, suffix_adverb };
  std::vector<Origin> origin(tokens.size(), Origin::fixed);
  bool initial = true;

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    Token& t = tokens[i];
    const std::string& s = t.surface;
    const std::string lower = detail::to_lower(s);
    t.lemma.reset();

    if (s == ",") {
      t.pos = Tag::comma;
      continue;
    }
    if (s == "." || s == "!" || s == "?") {
      t.pos = Tag::sentence_final;
      continue;
    }
    if (is_punct_only(s)) {
      t.pos = Tag::other;
      continue;
    }
    const bool at_start = initial;
    initial = false;

    if (is_cardinal_surface(s)) {
      t.pos = Tag::cardinal;
      continue;
    }
    const bool capitalized = detail::is_capitalized(s);
    if (!capitalized || at_start) {
      if (detail::bare_possessives().count(lower)) {
        t.pos = Tag::determiner;
        origin[i] = Origin::possessive;
        continue;
      }
      if (auto tag = closed_class_tag(lower)) {
        t.pos = *tag;
        continue;
      }
    }
    if (!capitalized || at_start) {
      if (auto verb = lex.verb_for_form(s)) {
        t.pos = Tag::verb_finite;
        t.lemma = *verb;
        continue;
      }
    }
    if (capitalized) {
      if (!at_start || lex.has_noun(s)) {
        t.pos = Tag::noun;
        continue;
      }
      // Sentence-initial capital without a noun entry: judge the lowercase
      // form; open-class words that stay unresolved remain nouns.
      t.pos = detail::has_adverb_suffix(lower) ? Tag::adverb : Tag::noun;
      continue;
    }
    if (detail::has_adverb_suffix(lower)) {
      t.pos = Tag::adverb;
      origin[i] = Origin::suffix_adverb;
    } else {
      t.pos = Tag::other;
      origin[i] = Origin::lowercase_open;
    }
  }

  // Right-to-left context pass: inflected open words before nominals are
  // adjectives; bare possessives are determiners only before nominals.
  for (std::size_t k = tokens.size(); k-- > 0;) {
    Token& t = tokens[k];
    const bool next_nominal = k + 1 < tokens.size() && is_nominal(tokens[k + 1].pos);
    const std::string lower = detail::to_lower(t.surface);
    switch (origin[k]) {
      case Origin::lowercase_open:
      case Origin::suffix_adverb:
        if (next_nominal && detail::has_inflection_ending(lower)) t.pos = Tag::adjective;
        break;
      case Origin::possessive:
        if (!next_nominal) t.pos = lower == "ihr" ? Tag::pronoun : Tag::other;
        break;
      case Origin::fixed:
        break;
    }
  }
  return tokens;
}

std::vector<Sentence> preprocess_document(std::string_view text, const std::string& document_id,
                                          const Lexicon& lex, const NeConfig& cfg) {
  std::vector<Sentence> out;
  for (const CharSpan& span : split_sentences(text, cfg)) {
    Sentence s;
    s.document = document_id;
    s.index = out.size();
    s.offset = span.begin;
    s.text = std::string(text.substr(span.begin, span.size()));
    s.tokens = tag_pos(tokenize(s.text, s.offset, cfg), lex);
    s.tokens = recognize_nes(std::move(s.tokens), s.text, s.offset, cfg, &lex);
    if (!s.tokens.empty()) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace vfe
