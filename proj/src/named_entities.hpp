#ifndef VFENRICH_SRC_NAMED_ENTITIES_HPP
#define VFENRICH_SRC_NAMED_ENTITIES_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "vfenrich/text.hpp"

namespace vfe::detail {

/// Character spans in raw text claimed by entity patterns and gazetteers.
/// Sentence splitting never cuts inside them.
std::vector<CharSpan> entity_spans(std::string_view text, const NeConfig& cfg);

/// Class of a complete candidate string, or nullopt.
std::optional<NeClass> classify_entity(std::string_view candidate, const NeConfig& cfg);

}  // namespace vfe::detail

#endif
