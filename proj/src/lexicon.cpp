#include "vfenrich/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "strings.hpp"
#include "vfenrich/error.hpp"
#include "vfenrich/frame.hpp"

namespace vfe {

using json = nlohmann::json;

std::string_view to_string(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::noun: return "noun";
    case PartOfSpeech::verb: return "verb";
    case PartOfSpeech::adjective: return "adjective";
  }
  return "?";
}

std::optional<PartOfSpeech> pos_from_string(std::string_view s) {
  if (s == "noun") return PartOfSpeech::noun;
  if (s == "verb") return PartOfSpeech::verb;
  if (s == "adjective") return PartOfSpeech::adjective;
  return std::nullopt;
}

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view doc, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < doc.size(); ++i) {
    if (doc[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw ParseError("lexicon: " + where + ": " + what, 0, 0);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, std::string("missing key '") + key + "'");
  return *it;
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) schema_error(where, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_array()) schema_error(where, std::string("'") + key + "' must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) schema_error(where, std::string("'") + key + "' must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

Lexicon Lexicon::load(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(document, e.byte);
    throw ParseError("lexicon: malformed JSON at line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + e.what(),
                     line, col);
  }
  if (!doc.is_object()) schema_error("document", "top level must be an object");

  std::vector<Synset> synsets;
  std::vector<VerbEntry> verbs;
  if (auto it = doc.find("synsets"); it != doc.end()) {
    if (!it->is_array()) schema_error("synsets", "must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& s = (*it)[i];
      std::string where = "synsets[" + std::to_string(i) + "]";
      if (!s.is_object()) schema_error(where, "must be an object");
      Synset syn;
      syn.id = string_field(s, "id", where);
      auto pos = pos_from_string(string_field(s, "pos", where));
      if (!pos) schema_error(where, "unknown pos '" + s["pos"].get<std::string>() + "'");
      syn.pos = *pos;
      syn.lemmas = string_list(s, "lemmas", where);
      syn.hypernyms = s.contains("hypernyms") ? string_list(s, "hypernyms", where)
                                              : std::vector<std::string>{};
      if (s.contains("category") && !s["category"].is_null())
        syn.label = string_field(s, "category", where);
      synsets.push_back(std::move(syn));
    }
  } else {
    schema_error("document", "missing key 'synsets'");
  }
  if (auto it = doc.find("verbs"); it != doc.end()) {
    if (!it->is_array()) schema_error("verbs", "must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& v = (*it)[i];
      std::string where = "verbs[" + std::to_string(i) + "]";
      if (!v.is_object()) schema_error(where, "must be an object");
      VerbEntry verb;
      verb.lemma = string_field(v, "lemma", where);
      verb.forms = v.contains("forms") ? string_list(v, "forms", where) : std::vector<std::string>{};
      verb.frames = string_list(v, "frames", where);
      verbs.push_back(std::move(verb));
    }
  } else {
    schema_error("document", "missing key 'verbs'");
  }
  return from_parts(std::move(synsets), std::move(verbs));
}

Lexicon Lexicon::load(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return load(std::string_view(ss.str()));
}

Lexicon Lexicon::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open lexicon '" + path.string() + "'");
  return load(in);
}

Lexicon Lexicon::from_parts(std::vector<Synset> synsets, std::vector<VerbEntry> verbs) {
  Lexicon lex;
  for (auto& s : synsets) {
    if (s.id.empty()) throw IntegrityError("synset with empty id", s.id);
    if (s.lemmas.empty()) throw IntegrityError("synset '" + s.id + "' has no lemmas", s.id);
    std::string id = s.id;
    if (!lex.synsets_.emplace(id, std::move(s)).second)
      throw IntegrityError("duplicate synset id '" + id + "'", id);
  }
  for (const auto& [id, s] : lex.synsets_) {
    if (s.hypernyms.empty() && !s.label)
      throw IntegrityError("root synset '" + id + "' lacks a category", id);
    for (const auto& h : s.hypernyms) {
      auto it = lex.synsets_.find(h);
      if (it == lex.synsets_.end())
        throw IntegrityError("synset '" + id + "' references unknown hypernym '" + h + "'", h);
      if (it->second.pos != s.pos)
        throw IntegrityError("synset '" + id + "' has hypernym '" + h + "' of another pos", h);
    }
  }

  // Cycle detection: iterative colouring DFS that reports the offending loop.
  enum class Mark { fresh, active, done };
  std::map<std::string, Mark> mark;
  for (const auto& [id, s] : lex.synsets_) mark[id] = Mark::fresh;
  std::vector<std::string> stack;
  std::function<void(const std::string&)> visit = [&](const std::string& id) {
    mark[id] = Mark::active;
    stack.push_back(id);
    for (const auto& h : lex.synsets_.at(id).hypernyms) {
      if (mark[h] == Mark::active) {
        auto from = std::find(stack.begin(), stack.end(), h);
        std::vector<std::string> cycle(from, stack.end());
        cycle.push_back(h);
        throw CycleError(std::move(cycle));
      }
      if (mark[h] == Mark::fresh) visit(h);
    }
    stack.pop_back();
    mark[id] = Mark::done;
  };
  for (const auto& [id, s] : lex.synsets_)
    if (mark[id] == Mark::fresh) visit(id);

  for (auto& v : verbs) {
    if (v.lemma.empty()) throw IntegrityError("verb with empty lemma", v.lemma);
    if (v.frames.empty()) throw IntegrityError("verb '" + v.lemma + "' has no frames", v.lemma);
    for (const auto& f : v.frames) {
      try {
        (void)parse_frame(f);
      } catch (const Error& e) {
        throw IntegrityError("verb '" + v.lemma + "': " + e.what(), v.lemma);
      }
    }
    if (std::find(v.forms.begin(), v.forms.end(), v.lemma) == v.forms.end())
      v.forms.insert(v.forms.begin(), v.lemma);
    std::string lemma = v.lemma;
    if (!lex.verbs_.emplace(lemma, std::move(v)).second)
      throw IntegrityError("duplicate verb '" + lemma + "'", lemma);
  }
  lex.build_indexes();
  return lex;
}

void Lexicon::build_indexes() {
  for (const auto& [id, s] : synsets_) {
    for (const auto& l : s.lemmas) {
      lemma_index_[{l, s.pos}].push_back(id);
      folded_index_[{detail::to_lower(l), s.pos}].push_back(id);
    }
  }
  for (auto* index : {&lemma_index_, &folded_index_})
    for (auto& [key, ids] : *index) ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  for (const auto& [lemma, v] : verbs_) {
    for (const auto& f : v.forms) {
      auto [it, fresh] = form_index_.emplace(f, lemma);
      if (!fresh && it->second != lemma)
        throw IntegrityError("form '" + f + "' belongs to both '" + it->second + "' and '" +
                                 lemma + "'",
                             f);
    }
  }

  std::function<std::size_t(const std::string&)> depth_of = [&](const std::string& id) {
    if (auto it = depth_.find(id); it != depth_.end()) return it->second;
    std::size_t d = 0;
    for (const auto& h : synsets_.at(id).hypernyms) d = std::max(d, depth_of(h) + 1);
    depth_[id] = d;
    return d;
  };
  for (auto& [id, s] : synsets_) {
    depth_of(id);
    auto labels = path_labels(id);
    s.category = labels.front();
  }
}

bool Lexicon::contains(std::string_view id) const {
  return synsets_.find(std::string(id)) != synsets_.end();
}

const Synset& Lexicon::synset(std::string_view id) const {
  auto it = synsets_.find(std::string(id));
  if (it == synsets_.end()) throw LookupError("unknown synset id '" + std::string(id) + "'");
  return it->second;
}

std::vector<const Synset*> Lexicon::lookup_synsets(std::string_view lemma, PartOfSpeech pos) const {
  std::vector<const Synset*> out;
  const std::vector<std::string>* ids = nullptr;
  if (auto it = lemma_index_.find({std::string(lemma), pos}); it != lemma_index_.end())
    ids = &it->second;
  else if (auto f = folded_index_.find({detail::to_lower(lemma), pos}); f != folded_index_.end())
    ids = &f->second;
  if (ids)
    for (const auto& id : *ids) out.push_back(&synsets_.at(id));
  return out;
}

bool Lexicon::has_noun(std::string_view lemma) const {
  return !lookup_synsets(lemma, PartOfSpeech::noun).empty();
}

std::vector<std::string> Lexicon::hypernym_path(std::string_view id) const {
  std::vector<std::string> path;
  const Synset* s = &synset(id);
  path.push_back(s->id);
  while (!s->hypernyms.empty()) {
    s = &synsets_.at(s->hypernyms.front());
    path.push_back(s->id);
  }
  return path;
}

std::vector<std::string> Lexicon::path_labels(std::string_view id) const {
  std::vector<std::string> labels;
  for (const auto& step : hypernym_path(id)) {
    const auto& s = synsets_.at(step);
    if (s.label) labels.push_back(*s.label);
  }
  return labels;
}

std::vector<std::string> Lexicon::ancestors(std::string_view id) const {
  std::set<std::string> seen;
  std::vector<std::string> todo{synset(id).id};
  while (!todo.empty()) {
    std::string cur = std::move(todo.back());
    todo.pop_back();
    if (!seen.insert(cur).second) continue;
    for (const auto& h : synsets_.at(cur).hypernyms) todo.push_back(h);
  }
  return {seen.begin(), seen.end()};
}

std::size_t Lexicon::depth(std::string_view id) const {
  auto it = depth_.find(std::string(id));
  if (it == depth_.end()) throw LookupError("unknown synset id '" + std::string(id) + "'");
  return it->second;
}

std::optional<std::string> Lexicon::lowest_common_hypernym(
    std::span<const std::string> ids) const {
  if (ids.empty()) throw ContractViolation("lowest_common_hypernym needs at least one id");
  PartOfSpeech pos = synset(ids.front()).pos;
  std::vector<std::string> common = ancestors(ids.front());
  for (const auto& id : ids.subspan(1)) {
    if (synset(id).pos != pos)
      throw ContractViolation("lowest_common_hypernym over mixed parts of speech");
    auto other = ancestors(id);
    std::vector<std::string> next;
    std::set_intersection(common.begin(), common.end(), other.begin(), other.end(),
                          std::back_inserter(next));
    common = std::move(next);
  }
  std::optional<std::string> best;
  for (const auto& c : common) {
    // `common` is sorted, so the first max-depth id is also the smallest.
    if (!best || depth(c) > depth(*best)) best = c;
  }
  return best;
}

std::optional<std::string> Lexicon::designated_synset(std::string_view category) const {
  for (const auto& [id, s] : synsets_)
    if (s.label && *s.label == category) return id;
  return std::nullopt;
}

std::vector<std::string> Lexicon::verb_frames(std::string_view lemma) const {
  const VerbEntry* v = verb(lemma);
  return v ? v->frames : std::vector<std::string>{};
}

const VerbEntry* Lexicon::verb(std::string_view lemma) const {
  auto it = verbs_.find(std::string(lemma));
  return it == verbs_.end() ? nullptr : &it->second;
}

std::optional<std::string> Lexicon::verb_for_form(std::string_view form) const {
  if (auto it = form_index_.find(std::string(form)); it != form_index_.end()) return it->second;
  if (auto it = form_index_.find(detail::to_lower(form)); it != form_index_.end())
    return it->second;
  return std::nullopt;
}

}  // namespace vfe
