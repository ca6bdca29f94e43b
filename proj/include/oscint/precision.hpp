#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <array>
#include <limits>
#include <string>
#include <type_traits>
#include <utility>

namespace oscint {

// Extended-precision scalars. The precision lives in the type, so values are
// safe to use from several threads at once (the variable-precision mpfr_float
// keeps its default precision in a process-wide global).
template <unsigned Digits10>
using ext_float = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<Digits10>,
                                                boost::multiprecision::et_off>;

// Working type for extended-precision phase-lag work (~ 336 bits).
using ext100 = ext_float<100>;

namespace detail {
inline constexpr std::array<unsigned, 11> tier_digits10 = {40,  58,  78,  116, 155, 232,
                                                           309, 463, 617, 925, 1234};
}

inline constexpr int tier_count = static_cast<int>(detail::tier_digits10.size());

template <class T>
constexpr int precision_bits_of() {
  return std::numeric_limits<T>::digits;
}

// Binary precision of tier k.
int tier_bits(int k);
// Smallest tier with at least `bits` bits, or -1 when none is large enough.
int tier_for_bits(int bits);

// Calls f(T{}) with T the extended type of tier k.
template <class F>
decltype(auto) with_tier(int k, F&& f) {
  using namespace detail;
  switch (k) {
    case 0: return f(ext_float<tier_digits10[0]>{});
    case 1: return f(ext_float<tier_digits10[1]>{});
    case 2: return f(ext_float<tier_digits10[2]>{});
    case 3: return f(ext_float<tier_digits10[3]>{});
    case 4: return f(ext_float<tier_digits10[4]>{});
    case 5: return f(ext_float<tier_digits10[5]>{});
    case 6: return f(ext_float<tier_digits10[6]>{});
    case 7: return f(ext_float<tier_digits10[7]>{});
    case 8: return f(ext_float<tier_digits10[8]>{});
    case 9: return f(ext_float<tier_digits10[9]>{});
    default: return f(ext_float<tier_digits10[10]>{});
  }
}

// Lower bound on the closed-form evaluation precision: OSCINT_PRECISION_BITS
// when set to a positive integer, else 128.
int precision_floor();

// Decimal string -> T without passing through double for multiprecision T.
template <class T>
T from_decimal(const std::string& s) {
  if constexpr (std::is_floating_point_v<T>)
    return static_cast<T>(std::stold(s));
  else
    return T(s);
}

}  // namespace oscint
