#include "named_entities.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>

#include <json.hpp>

#include "strings.hpp"
#include "vfenrich/error.hpp"
#include "vfenrich/lexicon.hpp"

namespace vfe {

std::string_view to_string(NeClass c) {
  switch (c) {
    case NeClass::registration_number: return "registration-number";
    case NeClass::licence_plate: return "licence-plate";
    case NeClass::date: return "date";
    case NeClass::person_name: return "person-name";
    case NeClass::vehicle_name: return "vehicle-name";
    case NeClass::location_name: return "location-name";
  }
  return "?";
}

NeConfig NeConfig::defaults() {
  NeConfig cfg;
  cfg.abbreviations = {"Nr.", "z.B.", "ca.", "Dr.", "bzw.", "usw.", "Str.", "Mr.", "Hr.", "Fr."};
  cfg.vehicles = {"VW", "Peugeot", "Renault", "Opel"};
  cfg.locations = {"A 9"};
  return cfg;
}

NeConfig NeConfig::load(std::istream& in) {
  using json = nlohmann::json;
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("NE config: ") + e.what(), 0, e.byte);
  }
  if (!doc.is_object()) throw ParseError("NE config: top level must be an object", 0, 0);
  NeConfig cfg = defaults();
  auto read = [&](const char* key, std::vector<std::string>& dst) {
    if (!doc.contains(key)) return;
    const json& v = doc[key];
    if (!v.is_array()) throw ParseError(std::string("NE config: '") + key + "' must be an array", 0, 0);
    dst.clear();
    for (const auto& e : v) {
      if (!e.is_string())
        throw ParseError(std::string("NE config: '") + key + "' must hold strings", 0, 0);
      dst.push_back(e.get<std::string>());
    }
  };
  read("abbreviations", cfg.abbreviations);
  read("vehicles", cfg.vehicles);
  read("locations", cfg.locations);
  read("persons", cfg.persons);
  return cfg;
}

NeConfig NeConfig::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open NE config '" + path.string() + "'");
  return load(in);
}

namespace detail {

namespace {

const std::string kMonths =
    "(Januar|Februar|März|April|Mai|Juni|Juli|August|September|Oktober|November|Dezember)";

const std::regex& registration_re() {
  static const std::regex re(R"([A-Z]\s+[0-9]+/[0-9]+)");
  return re;
}
const std::regex& licence_re() {
  static const std::regex re(R"([A-Z]{1,3}\s+[A-Z]{1,2}-[0-9]+)");
  return re;
}
const std::regex& numeric_date_re() {
  static const std::regex re(R"([0-9]{1,2}\.[0-9]{1,2}\.([0-9]{4}|[0-9]{2}))");
  return re;
}
const std::regex& named_date_re() {
  static const std::regex re("[0-9]{1,2}\\.\\s*" + kMonths + "(\\s+[0-9]{4})?");
  return re;
}

std::string normalize_ws(std::string_view s) { return join(split_ws(s), " "); }

bool in_list(std::string_view candidate, const std::vector<std::string>& list) {
  const std::string norm = normalize_ws(candidate);
  return std::any_of(list.begin(), list.end(),
                     [&](const std::string& e) { return normalize_ws(e) == norm; });
}

bool word_boundary(std::string_view text, std::size_t b, std::size_t e) {
  auto alnum = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || (c & 0x80); };
  return (b == 0 || !alnum(text[b - 1])) && (e >= text.size() || !alnum(text[e]));
}

}  // namespace

std::optional<NeClass> classify_entity(std::string_view candidate, const NeConfig& cfg) {
  auto full = [&](const std::regex& re) {
    return std::regex_match(candidate.begin(), candidate.end(), re);
  };
  if (full(registration_re())) return NeClass::registration_number;
  if (full(licence_re())) return NeClass::licence_plate;
  if (full(numeric_date_re()) || full(named_date_re())) return NeClass::date;
  if (in_list(candidate, cfg.locations)) return NeClass::location_name;
  if (in_list(candidate, cfg.vehicles)) return NeClass::vehicle_name;
  if (in_list(candidate, cfg.persons)) return NeClass::person_name;
  return std::nullopt;
}

std::vector<CharSpan> entity_spans(std::string_view text, const NeConfig& cfg) {
  std::vector<CharSpan> spans;
  for (const std::regex* re : {&registration_re(), &licence_re(), &numeric_date_re(), &named_date_re()}) {
    for (auto it = std::cregex_iterator(text.data(), text.data() + text.size(), *re);
         it != std::cregex_iterator(); ++it) {
      std::size_t b = static_cast<std::size_t>(it->position());
      std::size_t e = b + static_cast<std::size_t>(it->length());
      if (word_boundary(text, b, e)) spans.push_back({b, e});
    }
  }
  for (const auto* list : {&cfg.locations, &cfg.vehicles, &cfg.persons}) {
    for (const auto& entry : *list) {
      if (entry.empty()) continue;
      for (std::size_t pos = text.find(entry); pos != std::string_view::npos;
           pos = text.find(entry, pos + 1)) {
        if (word_boundary(text, pos, pos + entry.size())) spans.push_back({pos, pos + entry.size()});
      }
    }
  }
  std::sort(spans.begin(), spans.end(),
            [](const CharSpan& a, const CharSpan& b) { return a.begin < b.begin; });
  return spans;
}

}  // namespace detail

namespace {

constexpr std::size_t kMaxEntityTokens = 5;

bool model_name_candidate(const Token& t, const NeConfig& cfg, const Lexicon* lex) {
  if (!lex || t.ne_class || !detail::is_capitalized(t.surface)) return false;
  if (t.pos != Tag::noun && t.pos != Tag::proper_noun) return false;
  if (lex->has_noun(t.surface)) return false;
  return !detail::classify_entity(t.surface, cfg).has_value();
}

}  // namespace

std::vector<Token> recognize_nes(std::vector<Token> tokens, std::string_view text,
                                 std::size_t offset, const NeConfig& cfg, const Lexicon* lex) {
  auto slice = [&](std::size_t first, std::size_t last) {
    std::size_t b = tokens[first].span.begin - offset;
    std::size_t e = tokens[last - 1].span.end - offset;
    return text.substr(b, e - b);
  };

  std::vector<Token> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t best_len = 0;
    std::optional<NeClass> best;
    const std::size_t max_len = std::min(kMaxEntityTokens, tokens.size() - i);
    for (std::size_t len = max_len; len >= 1 && !best; --len) {
      if (auto cls = detail::classify_entity(slice(i, i + len), cfg)) {
        best = cls;
        best_len = len;
      }
    }
    if (!best) {
      out.push_back(std::move(tokens[i]));
      ++i;
      continue;
    }
    std::size_t last = i + best_len;
    if (*best == NeClass::vehicle_name)
      while (last < tokens.size() && model_name_candidate(tokens[last], cfg, lex)) ++last;

    Token merged;
    merged.surface = std::string(slice(i, last));
    merged.span = {tokens[i].span.begin, tokens[last - 1].span.end};
    merged.pos = Tag::proper_noun;
    merged.lemma = merged.surface;
    merged.ne_class = best;
    out.push_back(std::move(merged));
    i = last;
  }
  return out;
}

}  // namespace vfe
