#include <istream>
#include <ostream>
#include <string>

#include "strings.hpp"
#include "vfenrich/error.hpp"
#include "vfenrich/lexicon.hpp"
#include "vfenrich/text.hpp"

namespace vfe {

namespace {

void finish_sentence(std::vector<Sentence>& out, Sentence& cur, const std::string& document_id) {
  if (cur.tokens.empty()) return;
  cur.document = document_id;
  cur.index = out.size();
  out.push_back(std::move(cur));
  cur = Sentence{};
}

}  // namespace

std::vector<Sentence> read_pretagged(std::istream& in, const std::string& document_id) {
  std::vector<Sentence> out;
  Sentence cur;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      finish_sentence(out, cur, document_id);
      continue;
    }
    auto tab1 = line.find('\t');
    auto tab2 = tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos || line.find('\t', tab2 + 1) != std::string::npos)
      throw ParseError("pretagged: expected 3 tab-separated columns at line " +
                           std::to_string(lineno),
                       lineno, 1);
    Token t;
    t.surface = line.substr(0, tab1);
    std::string pos = line.substr(tab1 + 1, tab2 - tab1 - 1);
    std::string lemma = line.substr(tab2 + 1);
    if (t.surface.empty())
      throw ParseError("pretagged: empty surface at line " + std::to_string(lineno), lineno, 1);
    auto tag = tag_from_string(pos);
    if (!tag)
      throw ParseError("pretagged: unknown tag '" + pos + "' at line " + std::to_string(lineno),
                       lineno, tab1 + 2);
    t.pos = *tag;
    if (lemma != "-") t.lemma = lemma;
    if (!cur.text.empty()) cur.text += ' ';
    t.span = {cur.text.size(), cur.text.size() + t.surface.size()};
    cur.text += t.surface;
    cur.tokens.push_back(std::move(t));
  }
  finish_sentence(out, cur, document_id);
  return out;
}

void write_pretagged(std::ostream& out, const std::vector<Sentence>& sentences) {
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (i) out << '\n';
    for (const Token& t : sentences[i].tokens)
      out << t.surface << '\t' << to_string(t.pos) << '\t' << t.lemma.value_or("-") << '\n';
  }
}

std::vector<Sentence> preprocess_pretagged(std::istream& in, const std::string& document_id,
                                           const Lexicon& lex, const NeConfig& cfg) {
  auto sentences = read_pretagged(in, document_id);
  for (Sentence& s : sentences) {
    for (Token& t : s.tokens) {
      if (t.pos == Tag::verb_finite || t.pos == Tag::verb_other) {
        if (!t.lemma || !lex.verb(*t.lemma))
          if (auto verb = lex.verb_for_form(t.surface)) t.lemma = *verb;
      }
    }
    s.tokens = recognize_nes(std::move(s.tokens), s.text, s.offset, cfg, &lex);
  }
  return sentences;
}

}  // namespace vfe
