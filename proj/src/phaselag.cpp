#include "oscint/phaselag.hpp"
#include "oscint/errors.hpp"

#include <boost/math/special_functions/binomial.hpp>

#include <algorithm>
#include <limits>

namespace oscint {

StencilWeights stencil_weights(const CoefficientSet& c, double s) {
  StencilWeights w;
  w.A = stencil_weights_t(c.b, s);
  w.s = s;
  w.v = c.v;
  return w;
}

double phase_lag_denominator(const CoefficientSet& c, double s) {
  auto A = stencil_weights_t(c.b, s);
  double den = 0;
  for (int j = 1; j <= 7; ++j) den += 2.0 * j * j * A[j];
  return den;
}

double phase_lag(const CoefficientSet& c, double s) {
  double den = phase_lag_denominator(c, s);
  double scale = 0;
  for (double x : stencil_weights_t(c.b, s)) scale = std::max(scale, std::abs(x));
  if (std::abs(den) <= 1e-14 * std::max(1.0, scale))
    throw DegenerateDenominator("phase-lag denominator vanishes at s = " + std::to_string(s));
  return phase_lag_t(c.b, s);
}

DerivativeEstimate phase_lag_derivative(MethodId method, double v, int k) {
  using T = ext100;
  if (k < 0) throw std::invalid_argument("derivative order must be >= 0");
  if (method.fitted() && !(v > 0)) throw InvalidFrequency("v must be positive");
  const T vv(v);
  const auto b = coefficients_b_t<T>(method, vv);
  const auto pl = [&](const T& s) { return phase_lag_t(b, s); };
  DerivativeEstimate out;
  if (k == 0) {
    out.value = static_cast<double>(pl(vv));
    return out;
  }
  const T eps = std::numeric_limits<T>::epsilon();
  const T scale = std::max(T(1), abs(vv));
  const T h = pow(eps, T(1) / T(k + 2)) * scale;
  auto diff = [&](const T& step, T& fmax) {
    T acc = 0;
    for (int r = 0; r <= k; ++r) {
      T f = pl(vv + (T(k) / 2 - r) * step);
      fmax = std::max(fmax, T(abs(f)));
      T c = boost::math::binomial_coefficient<double>(k, r);
      acc += (r % 2 ? -c : c) * f;
    }
    return acc / pow(step, k);
  };
  T fmax = 0;
  T d1 = diff(h, fmax);
  T d2 = diff(2 * h, fmax);
  // truncation is O(h^2): D(h) - D(2h) ~ -3 c h^2
  T trunc = abs(d1 - d2) / 3;
  T round = eps * pow(T(2), k) * std::max(fmax, T(1)) / pow(h, k);
  out.value = static_cast<double>(d1);
  out.error_estimate = static_cast<double>(trunc + round);
  out.step = static_cast<double>(h);
  return out;
}

namespace {

template <class R, class Get>
OrderConditionVector<R> order_conditions_impl(int qmax, Get&& b) {
  if (qmax < 2) throw std::invalid_argument("qmax must be >= 2");
  OrderConditionVector<R> out;
  out.qmax = qmax;
  R c0 = 0, c1 = 0;
  for (int j = 0; j < 15; ++j) {
    c0 += R(a_pattern[j]);
    c1 += R(j * a_pattern[j]);
  }
  out.C = {c0, c1};
  for (int q = 2; q <= qmax; ++q) {
    // exact factorials; 20! still fits in 64 bits
    boost::multiprecision::mpz_int fq = 1, fq2 = 1;
    for (int k = 2; k <= q; ++k) fq *= k;
    for (int k = 2; k <= q - 2; ++k) fq2 *= k;
    R sa = 0, sb = 0;
    for (int j = 0; j < 15; ++j) {
      boost::multiprecision::mpz_int jq = boost::multiprecision::pow(boost::multiprecision::mpz_int(j), q);
      boost::multiprecision::mpz_int jq2 =
          boost::multiprecision::pow(boost::multiprecision::mpz_int(j), q - 2);
      sa += R(jq.str()) * R(a_pattern[j]);
      sb += R(jq2.str()) * b(j);
    }
    out.C.push_back(sa / R(fq.str()) - sb / R(fq2.str()));
  }
  return out;
}

}  // namespace

OrderConditionVector<Rational> order_conditions(const ExactCoefficientSet& c, int qmax) {
  return order_conditions_impl<Rational>(qmax, [&](int j) { return c.b[j]; });
}

OrderConditionVector<double> order_conditions(const CoefficientSet& c, int qmax) {
  // sums of j^q up to 14^20 cancel heavily: accumulate in extended precision
  using W = ext_float<116>;
  auto wide = order_conditions_impl<W>(qmax, [&](int j) { return W(c.b[j]); });
  OrderConditionVector<double> out;
  out.qmax = qmax;
  for (const auto& x : wide.C) out.C.push_back(static_cast<double>(x));
  return out;
}

Rational plte_constant() { return parse_rational("152802083671/2853107712000"); }

std::vector<PlteTerm> plte_polynomial(MethodId m) {
  const Rational c = plte_constant();
  if (!m.fitted()) return {{16, 0, 1, c}};
  const int n = m.derivative_count() + 1;
  std::vector<PlteTerm> out;
  long long binom = 1;
  for (int k = 0; k <= n; ++k) {
    out.push_back({16 - 2 * k, 2 * k, binom, c * binom});
    binom = binom * (n - k) / (k + 1);
  }
  return out;
}

}  // namespace oscint
