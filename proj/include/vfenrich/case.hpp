#ifndef VFENRICH_CASE_HPP
#define VFENRICH_CASE_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vfe {

// Canonical order; used for tie-breaking and rendering.
enum class Case : std::uint8_t { nominative = 0, genitive = 1, dative = 2, accusative = 3 };

inline constexpr Case kAllCases[] = {Case::nominative, Case::genitive, Case::dative,
                                     Case::accusative};

std::string_view to_string(Case c);
std::string_view short_name(Case c);  // nom, gen, dat, acc
std::optional<Case> case_from_string(std::string_view s);  // accepts long and short names

/// Subset of the four German cases.
class CaseSet {
 public:
  constexpr CaseSet() = default;
  constexpr CaseSet(std::initializer_list<Case> cases) {
    for (Case c : cases) bits_ |= bit(c);
  }

  static constexpr CaseSet all() { return from_bits(0xF); }
  static constexpr CaseSet from_bits(std::uint8_t b) {
    CaseSet s;
    s.bits_ = b & 0xF;
    return s;
  }

  constexpr bool contains(Case c) const { return bits_ & bit(c); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return ((bits_ >> 0) & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1) + ((bits_ >> 3) & 1);
  }
  constexpr std::uint8_t bits() const { return bits_; }
  constexpr void insert(Case c) { bits_ |= bit(c); }

  constexpr CaseSet operator&(CaseSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr CaseSet operator|(CaseSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr bool operator==(const CaseSet&) const = default;

  std::vector<Case> members() const;
  /// "nom,acc" style rendering in canonical order; "-" when empty.
  std::string to_string() const;

 private:
  static constexpr std::uint8_t bit(Case c) { return std::uint8_t(1u << unsigned(c)); }
  std::uint8_t bits_ = 0;
};

}  // namespace vfe

#endif  // VFENRICH_CASE_HPP
