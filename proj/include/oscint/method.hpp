#pragma once

#include <array>
#include <string>
#include <string_view>

namespace oscint {

enum class Variant { Classical, PFD0, PFD1, PFD2, PFD3, PFD4, PFD5, PFD6 };

// Selector over the classical method and the seven phase-fitted variants.
// derivative_count is -1 for the classical method (no phase fitting) and i for
// PF-Di: the phase-lag and its first i derivatives vanish at the fitted
// frequency.
struct MethodId {
  Variant variant = Variant::Classical;

  constexpr int derivative_count() const { return static_cast<int>(variant) - 1; }
  constexpr bool fitted() const { return variant != Variant::Classical; }

  static constexpr MethodId classical() { return {Variant::Classical}; }
  static constexpr MethodId pfd(int i) { return {static_cast<Variant>(i + 1)}; }

  friend constexpr bool operator==(MethodId, MethodId) = default;
};

inline constexpr std::array<MethodId, 8> all_methods = {
    MethodId::classical(), MethodId::pfd(0), MethodId::pfd(1), MethodId::pfd(2),
    MethodId::pfd(3),      MethodId::pfd(4), MethodId::pfd(5), MethodId::pfd(6)};

// "classical", "pfd0" ... "pfd6"
std::string method_name(MethodId m);
// Accepts the names above case-insensitively, plus "pf-d3" style spellings.
// Throws std::invalid_argument on anything else.
MethodId parse_method(std::string_view name);

}  // namespace oscint
