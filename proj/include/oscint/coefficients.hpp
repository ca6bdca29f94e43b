#pragma once

#include "oscint/method.hpp"
#include "oscint/precision.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <array>
#include <string>
#include <vector>

namespace oscint {

using Rational = boost::multiprecision::mpq_rational;

// "p/q" (or "p" for integers), always reduced.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

// The first-characteristic weights shared by every member of the family.
inline constexpr std::array<int, 15> a_pattern = {1, -2, 2, -1, 0, 0, 0, 0, 0, 0, 0, -1, 2, -2, 1};

struct ExactCoefficientSet {
  MethodId method;
  std::array<Rational, 15> a;
  std::array<Rational, 15> b;
};

struct CoefficientSet {
  MethodId method;
  double v = 0;  // fitted frequency omega*h; 0 for the classical method
  std::array<double, 15> a{};
  std::array<double, 15> b{};
  int precision_bits_used = 53;
};

struct CancellationProfile {
  MethodId method;
  // Order of the v -> 0 zero of the full (uncancelled) denominator.
  int denominator_zero_order = 0;
  // Same after the common numerator prefactor has been cancelled; this is the
  // cancellation that remains to be paid for with extra precision.
  int reduced_zero_order = 0;
  // Denominator zeros in (0, pole_search_limit].
  std::vector<double> pole_locations;
};

inline constexpr double pole_search_limit = 20.0;
inline constexpr double pole_exclusion_radius = 1e-3;

ExactCoefficientSet classical_coefficients();
CoefficientSet to_double(const ExactCoefficientSet& c);

CancellationProfile cancellation_profile(MethodId m);

// Bits needed to evaluate the closed forms at v: max(floor, 53 + m' log2(1/v) + 20).
int precision_budget(MethodId m, double v, int floor_bits = -1);

struct ClosedFormResult {
  std::array<double, 7> b{};  // b_1..b_7
  double error_estimate = 0;  // max relative change when evaluated one tier higher
  int precision_bits_used = 0;
};

// Closed-form weights b_1..b_7 of PF-Di at v, evaluated at >= precision_bits.
// Throws InvalidFrequency, PoleProximity, PrecisionInsufficient.
ClosedFormResult closed_form_b(MethodId m, double v, int precision_bits);

// Same in the caller's scalar type (double or ext_float<D>), no checks.
template <class T>
std::array<T, 7> closed_form_b_t(MethodId m, const T& v);

// Weights b_1..b_7 of PF-Di from the defining linear system (order conditions
// plus vanishing phase conditions); used as an independent cross-check.
template <class T>
std::array<T, 7> fitting_system_b_t(MethodId m, const T& v);

inline constexpr double taylor_validity_radius = 0.5;

// Truncated power series in v (terms through v^10).
std::array<double, 7> taylor_b(MethodId m, double v);
template <class T>
std::array<T, 7> taylor_b_t(MethodId m, const T& v);

// Exact rational series coefficient of v^power in b_j (j = 1..7); zero when
// the series has no such term.
Rational taylor_coefficient(MethodId m, int j, int power);

struct CoefficientOptions {
  double v_switch = 0.05;
  double v_max = 6.0;
  int precision_floor = -1;  // -1: precision_floor()
};

CoefficientSet coefficients(MethodId m, double v, const CoefficientOptions& opt = {});

// Weights as an extended-precision 15-vector (Taylor branch below v_switch).
template <class T>
std::array<T, 15> coefficients_b_t(MethodId m, const T& v, double v_switch = 0.05);

// 15-vector b from b_1..b_7 by symmetry, b_0 = b_14 = 0.
template <class T>
std::array<T, 15> mirror(const std::array<T, 7>& half) {
  std::array<T, 15> b{};
  b[0] = b[14] = T(0);
  for (int j = 1; j <= 7; ++j) b[j] = b[14 - j] = half[j - 1];
  return b;
}

}  // namespace oscint
