#include "oscint/coefficients.hpp"
#include "oscint/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace oscint {

std::string to_string(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& s) {
  using boost::multiprecision::mpz_int;
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(mpz_int(s));
  mpz_int den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  return Rational(mpz_int(s.substr(0, slash)), den);
}

ExactCoefficientSet classical_coefficients() {
  static const char* const half[7] = {
      "433489274083/237758976000", "-28417333297/4953312000", "930518896733/39626496000",
      "-176930551859/2971987200",  "7854755921/65228800",     "-146031020287/825552000",
      "577045151693/2830464000"};
  ExactCoefficientSet c;
  c.method = MethodId::classical();
  for (int j = 0; j < 15; ++j) c.a[j] = a_pattern[j];
  c.b[0] = c.b[14] = 0;
  for (int j = 1; j <= 7; ++j) c.b[j] = c.b[14 - j] = parse_rational(half[j - 1]);
  return c;
}

CoefficientSet to_double(const ExactCoefficientSet& c) {
  CoefficientSet d;
  d.method = c.method;
  auto wide = coefficients_b_t<ext_float<40>>(MethodId::classical(), ext_float<40>(0));
  for (int j = 0; j < 15; ++j) {
    d.a[j] = a_pattern[j];
    d.b[j] = static_cast<double>(wide[j]);
  }
  return d;
}

CoefficientSet coefficients(MethodId m, double v, const CoefficientOptions& opt) {
  CoefficientSet s;
  s.method = m;
  for (int j = 0; j < 15; ++j) s.a[j] = a_pattern[j];
  if (!m.fitted()) {
    static const CoefficientSet classical = to_double(classical_coefficients());
    s.b = classical.b;
    return s;
  }
  if (!(v > 0) || !std::isfinite(v))
    throw InvalidFrequency("fitted methods need v > 0, got " + std::to_string(v));
  if (v > opt.v_max)
    throw InvalidFrequency("v = " + std::to_string(v) + " exceeds v_max = " + std::to_string(opt.v_max));
  s.v = v;
  std::array<double, 7> half;
  if (v < opt.v_switch) {
    half = taylor_b_t(m, v);
    s.precision_bits_used = 53;
  } else {
    auto r = closed_form_b(m, v, precision_budget(m, v, opt.precision_floor));
    half = r.b;
    s.precision_bits_used = r.precision_bits_used;
  }
  s.b = mirror(half);
  return s;
}

}  // namespace oscint
