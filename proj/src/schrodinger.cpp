#include "oscint/schrodinger.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <stdexcept>

namespace oscint {

namespace {
constexpr double pi = boost::math::constants::pi<double>();
}

double woods_saxon(double x, const WoodsSaxonParams& p) {
  const double t = (x - p.x0) / p.a;
  if (t > 0) {
    // q = e^t may overflow; rewrite with e = 1/q
    const double e = std::exp(-t);
    return p.u0 * e / (1 + e) + p.u1() * e / ((1 + e) * (1 + e));
  }
  const double q = std::exp(t);
  return p.u0 / (1 + q) + p.u1() * q / ((1 + q) * (1 + q));
}

std::string convention_name(OmegaConvention c) {
  return c == OmegaConvention::Paper ? "paper" : "physical";
}

OmegaConvention parse_convention(const std::string& s) {
  if (s == "paper") return OmegaConvention::Paper;
  if (s == "physical") return OmegaConvention::Physical;
  throw std::invalid_argument("omega convention must be 'paper' or 'physical', got '" + s + "'");
}

double schrodinger_rhs(double x, double y, const RadialScatteringProblem& p) {
  double centrifugal = 0;
  if (p.l > 0) {
    if (x == 0) throw SingularOrigin("centrifugal term is singular at x = 0 for l > 0");
    centrifugal = p.l * (p.l + 1) / (x * x);
  }
  return (centrifugal + p.V(x) - p.E) * y;
}

double spherical_bessel_j(int l, double x) {
  if (!(x > 0)) throw std::invalid_argument("spherical_bessel_j: x must be positive");
  return std::sph_bessel(static_cast<unsigned>(l), x);
}

double spherical_neumann_n(int l, double x) {
  if (!(x > 0)) throw std::invalid_argument("spherical_neumann_n: x must be positive");
  return std::sph_neumann(static_cast<unsigned>(l), x);
}

namespace {

struct pair_terms {
  double num, den, wronskian, scale;
};

pair_terms terms(double yi, double yj, double xi, double xj, double k, int l) {
  const double Si = k * xi * spherical_bessel_j(l, k * xi);
  const double Sj = k * xj * spherical_bessel_j(l, k * xj);
  const double Ci = k * xi * spherical_neumann_n(l, k * xi);
  const double Cj = k * xj * spherical_neumann_n(l, k * xj);
  return {yi * Sj - yj * Si, yj * Ci - yi * Cj, Sj * Ci - Si * Cj, std::abs(Sj * Ci) + std::abs(Si * Cj)};
}

void check_pair(const pair_terms& t, double xi, double xj) {
  if (!(xi < xj)) throw std::invalid_argument("tan_delta: need x_i < x_{i+1}");
  // S and C cannot be separated when the pair's Wronskian-like determinant vanishes
  if (!(std::abs(t.wronskian) > 1e-10 * t.scale))
    throw IllConditionedPair("sample pair cannot separate the regular and irregular solutions");
}

}  // namespace

double tan_delta(double y_i, double y_ip1, double x_i, double x_ip1, double k, int l) {
  auto t = terms(y_i, y_ip1, x_i, x_ip1, k, l);
  check_pair(t, x_i, x_ip1);
  return t.num / t.den;  // +-inf when delta is exactly pi/2
}

double tan_delta_denominator(double y_i, double y_ip1, double x_i, double x_ip1, double k, int l) {
  return terms(y_i, y_ip1, x_i, x_ip1, k, l).den;
}

FrequencySchedule schrodinger_schedule(const RadialScatteringProblem& p, OmegaConvention c,
                                       double switch_point) {
  const double inner2 = c == OmegaConvention::Paper ? p.E - 50 : p.E + 50;
  if (!(inner2 > 0) || !(p.E > 0))
    throw InvalidFrequency("energy too low for the two-segment frequency schedule");
  return {{switch_point}, {std::sqrt(inner2), std::sqrt(p.E)}};
}

Trajectory<double> integrate_radial(const RadialScatteringProblem& p, MethodId method,
                                    const PhaseShiftOptions& opt, double y_scale) {
  if (!(p.E > 0)) throw std::invalid_argument("energy must be positive");
  if (!(p.h > 0)) throw std::invalid_argument("step must be positive");
  const long n = std::lround(p.x_end / p.h);
  if (n < 200) throw std::invalid_argument("need at least 200 steps over [0, x_end]");
  SecondOrderIVP<double> ivp;
  ivp.rhs = [&p](double x, double y) { return schrodinger_rhs(x, y, p); };
  ivp.t0 = 0;
  ivp.y0 = 0;
  if (p.l == 0) {
    ivp.start = StartValue<double>{y_scale * p.h};
  } else {
    // regular solution ~ x^{l+1} started just off the singular origin
    const double ts = p.h / 100;
    ivp.start = OffsetStart<double>{ts, y_scale * std::pow(ts, p.l + 1),
                                    y_scale * (p.l + 1) * std::pow(ts, p.l)};
  }
  FrequencySchedule sched = method.fitted() ? schrodinger_schedule(p, opt.convention, opt.switch_point)
                                            : FrequencySchedule::constant(1.0);
  return integrate(ivp, method, p.h, n * p.h, sched);
}

PhaseShiftResult phase_shift_from_pair(const Trajectory<double>& tr, std::size_t i, double k, int l,
                                       double reference_delta) {
  PhaseShiftResult r;
  const double xi = tr.t[i], xj = tr.t[i + 1];
  auto t = terms(tr.y[i], tr.y[i + 1], xi, xj, k, l);
  check_pair(t, xi, xj);
  r.tan_delta = t.num / t.den;
  double d = std::atan2(t.num, t.den);  // tan(d) = num/den
  if (!std::isfinite(d)) {
    // the recurrence blew up (step outside the interval of periodicity)
    r.delta = d;
    r.digits = 0;
    r.pair_used = {xi, xj};
    r.steps = static_cast<long>(tr.t.size() - 1);
    r.rhs_evals = tr.rhs_evals;
    return r;
  }
  d = std::fmod(d, pi);
  if (d < 0) d += pi;
  r.delta = d;
  double err = std::abs(d - reference_delta);
  err = std::min(err, pi - err);  // phase shifts are defined modulo pi
  r.digits = err > 0 ? std::min(digits_cap, -std::log10(err)) : digits_cap;
  r.pair_used = {xi, xj};
  r.steps = static_cast<long>(tr.t.size() - 1);
  r.rhs_evals = tr.rhs_evals;
  return r;
}

PhaseShiftResult solve_phase_shift(const RadialScatteringProblem& p, MethodId method,
                                   const PhaseShiftOptions& opt) {
  auto tr = integrate_radial(p, method, opt);
  const double k = std::sqrt(p.E);
  std::size_t best = 0;
  double best_den = -1;
  for (std::size_t i = 0; i + 1 < tr.t.size(); ++i) {
    if (tr.t[i] < opt.pair_window_lo - 1e-12) continue;
    double den = std::abs(tan_delta_denominator(tr.y[i], tr.y[i + 1], tr.t[i], tr.t[i + 1], k, p.l));
    if (!std::isfinite(den)) den = 0;
    if (den > best_den) {
      best_den = den;
      best = i;
    }
  }
  if (best_den < 0) throw std::invalid_argument("no sample pair inside the asymptotic window");
  return phase_shift_from_pair(tr, best, k, p.l, opt.reference_delta);
}

}  // namespace oscint
