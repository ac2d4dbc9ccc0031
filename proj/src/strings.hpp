// Small UTF-8 aware helpers for German surface forms. Only the characters the
// tagger cares about (ASCII, umlauts) are case-mapped.
#ifndef VFENRICH_SRC_STRINGS_HPP
#define VFENRICH_SRC_STRINGS_HPP

#include <string>
#include <string_view>
#include <vector>

namespace vfe::detail {

bool is_capitalized(std::string_view s);
std::string to_lower(std::string_view s);
bool is_digits(std::string_view s);
bool ends_with(std::string_view s, std::string_view suffix);
bool starts_with(std::string_view s, std::string_view prefix);
std::vector<std::string> split_ws(std::string_view s);
std::string trim(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace vfe::detail

#endif
