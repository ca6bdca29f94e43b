#pragma once

#include "oscint/coefficients.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace oscint {

struct StencilWeights {
  std::array<double, 8> A{};  // A_j = a_{7-j} + s^2 b_{7-j}
  double s = 0;
  double v = 0;
};

StencilWeights stencil_weights(const CoefficientSet& c, double s);

template <class T>
std::array<T, 8> stencil_weights_t(const std::array<T, 15>& b, const T& s) {
  std::array<T, 8> A;
  T s2 = s * s;
  for (int j = 0; j < 8; ++j) A[j] = T(a_pattern[7 - j]) + s2 * b[7 - j];
  return A;
}

// [2 sum_{j=1..7} A_j cos(j s) + A_0] / [2 sum_{j=1..7} j^2 A_j]
double phase_lag(const CoefficientSet& c, double s);

template <class T>
T phase_lag_t(const std::array<T, 15>& b, const T& s) {
  using std::cos;
  auto A = stencil_weights_t(b, s);
  T num = A[0], den = 0;
  for (int j = 1; j <= 7; ++j) {
    num += 2 * A[j] * cos(j * s);
    den += 2 * j * j * A[j];
  }
  return num / den;
}

// Denominator of the phase-lag expression (used for scaled tolerances).
double phase_lag_denominator(const CoefficientSet& c, double s);

struct DerivativeEstimate {
  double value = 0;
  double error_estimate = 0;
  double step = 0;
};

// k-th derivative in s of the phase lag of `method` fitted at v, taken at
// s = v by central differences in extended precision.
DerivativeEstimate phase_lag_derivative(MethodId method, double v, int k);

template <class R>
struct OrderConditionVector {
  std::vector<R> C;  // C_0 .. C_qmax
  int qmax = 0;
};

OrderConditionVector<Rational> order_conditions(const ExactCoefficientSet& c, int qmax);
OrderConditionVector<double> order_conditions(const CoefficientSet& c, int qmax);

// Leading error constant of the classical method.
Rational plte_constant();

struct PlteTerm {
  int derivative_order;  // order of y
  int omega_power;       // power of omega
  long long binomial;
  Rational coefficient;  // plte_constant() * binomial
};

// plte_constant() * sum_{k=0..i+1} C(i+1, k) omega^{2k} y^{(16-2k)}; for the
// classical method only the y^{(16)} term.
std::vector<PlteTerm> plte_polynomial(MethodId m);

}  // namespace oscint
