#pragma once

#include "oscint/coefficients.hpp"
#include "oscint/errors.hpp"

#include <boost/numeric/odeint/stepper/runge_kutta_fehlberg78.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace oscint {

// How the solution is started; the multistep recurrence needs 14 values.
template <class Real>
struct StartValue {  // y(t0 + h); the initial slope is found by shooting
  Real y1;
};
template <class Real>
struct StartSlope {  // y'(t0)
  Real dy0;
};
template <class Real>
struct LocalSolution {  // exact local solution, sampled at the starting nodes
  std::function<Real(Real)> y;
};
template <class Real>
struct OffsetStart {  // state at t0 < ts < t0 + h, for rhs singular at t0
  Real ts, ys, dys;
};

template <class Real>
struct SecondOrderIVP {
  std::function<Real(Real, Real)> rhs;  // (t, y) -> y''
  Real t0 = 0;
  Real y0 = 0;
  std::variant<StartValue<Real>, StartSlope<Real>, LocalSolution<Real>, OffsetStart<Real>> start =
      StartSlope<Real>{Real(0)};
};

struct FrequencySchedule {
  std::vector<double> breakpoints;  // ascending
  std::vector<double> omegas;       // breakpoints.size() + 1 entries

  static FrequencySchedule constant(double omega) { return {{}, {omega}}; }
  // Segment k covers [breakpoint k-1, breakpoint k); a grid point lying exactly
  // on a breakpoint belongs to the later segment.
  int segment(double t) const {
    return static_cast<int>(std::upper_bound(breakpoints.begin(), breakpoints.end(), t) -
                            breakpoints.begin());
  }
  double omega_at(double t) const { return omegas.at(static_cast<std::size_t>(segment(t))); }
  void validate() const;
};

template <class Real>
struct Trajectory {
  std::vector<Real> t, y, f;
  MethodId method;
  Real h = 0;
  std::size_t rhs_evals = 0;
};

template <class Real>
struct BootstrapResult {
  std::vector<Real> y;  // y at t0, t0+h, ..., t0+count*h
  std::size_t rhs_evals = 0;
};

inline constexpr int bootstrap_substeps = 100;

namespace detail {

template <class Real>
struct rkn_state {
  using state = std::array<Real, 2>;
  using stepper = boost::numeric::odeint::runge_kutta_fehlberg78<state, Real, state, Real>;
};

// Advances (y, y') from t to each of `targets` with an order-8 one-step method
// using `sub` equal substeps per unit interval h.
template <class Real>
std::vector<Real> shoot(const SecondOrderIVP<Real>& p, Real t, Real y, Real dy,
                        const std::vector<Real>& targets, Real h, std::size_t& evals) {
  typename rkn_state<Real>::stepper st;
  typename rkn_state<Real>::state x{y, dy};
  auto sys = [&](const typename rkn_state<Real>::state& s, typename rkn_state<Real>::state& d, Real tt) {
    ++evals;
    d[0] = s[1];
    d[1] = p.rhs(tt, s[0]);
  };
  std::vector<Real> out;
  for (const Real& target : targets) {
    Real span = target - t;
    if (span > 0) {
      using std::ceil;
      long n = std::max(1L, static_cast<long>(ceil(static_cast<double>(span / h) * bootstrap_substeps - 1e-9)));
      Real dt = span / n;
      for (long k = 0; k < n; ++k) {
        st.do_step(sys, x, t, dt);
        t = (k + 1 == n) ? target : t + dt;
      }
    }
    out.push_back(x[0]);
  }
  return out;
}

}  // namespace detail

template <class Real>
BootstrapResult<Real> bootstrap(const SecondOrderIVP<Real>& p, Real h, int count = 13) {
  using std::abs;
  if (!(h > 0)) throw std::invalid_argument("bootstrap: h must be positive");
  BootstrapResult<Real> r;
  std::vector<Real> nodes;
  for (int k = 1; k <= count; ++k) nodes.push_back(p.t0 + k * h);
  if (auto* ls = std::get_if<LocalSolution<Real>>(&p.start)) {
    r.y.push_back(ls->y(p.t0));  // y0 is taken from the local solution too
    for (const Real& t : nodes) r.y.push_back(ls->y(t));
    return r;
  }
  r.y.push_back(p.y0);

  if (auto* sl = std::get_if<StartSlope<Real>>(&p.start)) {
    auto ys = detail::shoot(p, p.t0, p.y0, sl->dy0, nodes, h, r.rhs_evals);
    r.y.insert(r.y.end(), ys.begin(), ys.end());
  } else if (auto* os = std::get_if<OffsetStart<Real>>(&p.start)) {
    auto ys = detail::shoot(p, os->ts, os->ys, os->dys, nodes, h, r.rhs_evals);
    r.y.insert(r.y.end(), ys.begin(), ys.end());
  } else {
    const Real y1 = std::get<StartValue<Real>>(p.start).y1;
    const std::vector<Real> first{p.t0 + h};
    auto miss = [&](const Real& d) { return detail::shoot(p, p.t0, p.y0, d, first, h, r.rhs_evals)[0] - y1; };
    // secant on the initial slope; one step is exact for linear problems
    Real d0 = (y1 - p.y0) / h;
    Real d1 = d0 + (abs(d0) > 0 ? d0 / 1024 : Real(1) / 1024);
    Real g0 = miss(d0), g1 = miss(d1);
    const Real tol = 8 * std::numeric_limits<Real>::epsilon() * std::max(abs(y1), abs(p.y0) + abs(d0 * h));
    int it = 0;
    while (abs(g1) > tol && g1 != g0) {
      if (++it > 30) throw ConvergenceFailure("bootstrap shooting did not converge");
      Real d2 = d1 - g1 * (d1 - d0) / (g1 - g0);
      d0 = d1;
      g0 = g1;
      d1 = d2;
      g1 = miss(d1);
    }
    // keep the shot value at t0 + h (not y1) so all starting values come from one solution
    auto ys = detail::shoot(p, p.t0, p.y0, d1, nodes, h, r.rhs_evals);
    r.y.insert(r.y.end(), ys.begin(), ys.end());
  }
  return r;
}

// y_{n+14} = -sum_{j=0..13} a_j y_{n+j} + h^2 sum_{j=1..13} b_j f_{n+j}
// y: y_n .. y_{n+13};  f: f_{n+1} .. f_{n+13}
template <class Real>
Real step(std::span<const Real, 14> y, std::span<const Real, 13> f, const std::array<Real, 15>& b,
          const Real& h) {
  // a = [1,-2,2,-1,0,...,0,-1,2,-2], a_14 = 1
  Real lin = -(y[0] - 2 * y[1] + 2 * y[2] - y[3] - y[11] + 2 * y[12] - 2 * y[13]);
  Real acc = b[7] * f[6];
  for (int j = 1; j <= 6; ++j) acc += b[j] * (f[j - 1] + f[13 - j]);
  return lin + h * h * acc;
}

template <class Real>
std::array<Real, 15> method_weights(MethodId m, double v) {
  if constexpr (std::is_same_v<Real, double>) {
    return coefficients(m, v).b;
  } else {
    using W = ext_float<78>;
    if (m.fitted()) coefficients(m, v);  // validation only
    auto wide = coefficients_b_t<W>(m, W(v));
    std::array<Real, 15> b;
    for (int j = 0; j < 15; ++j) b[j] = Real(wide[j].str(0, std::ios_base::scientific));
    return b;
  }
}

template <class Real>
Trajectory<Real> integrate(const SecondOrderIVP<Real>& p, MethodId method, Real h, Real t_end,
                           const FrequencySchedule& schedule) {
  using std::round;
  if (!(h > 0)) throw std::invalid_argument("integrate: h must be positive");
  const long n_steps = static_cast<long>(round(static_cast<double>((t_end - p.t0) / h)));
  if (n_steps < 14) throw std::invalid_argument("integrate: need at least 14 steps");
  if (method.fitted()) schedule.validate();

  Trajectory<Real> tr;
  tr.method = method;
  tr.h = h;
  tr.t.resize(static_cast<std::size_t>(n_steps + 1));
  for (long k = 0; k <= n_steps; ++k) tr.t[static_cast<std::size_t>(k)] = p.t0 + k * h;
  tr.y.reserve(tr.t.size());
  tr.f.reserve(tr.t.size());

  auto boot = bootstrap(p, h, 13);
  tr.rhs_evals = boot.rhs_evals;
  for (int k = 0; k <= 13; ++k) {
    tr.y.push_back(boot.y[static_cast<std::size_t>(k)]);
    Real fk;
    try {
      fk = p.rhs(tr.t[static_cast<std::size_t>(k)], tr.y.back());
      ++tr.rhs_evals;
    } catch (const SingularOrigin&) {
      // f at a singular start is never used: b_0 = 0
      fk = std::numeric_limits<Real>::quiet_NaN();
    }
    tr.f.push_back(fk);
  }

  int segment = -1;
  std::array<Real, 15> b{};
  for (long m = 14; m <= n_steps; ++m) {
    const double tm = static_cast<double>(tr.t[static_cast<std::size_t>(m)]);
    const int seg = method.fitted() ? schedule.segment(tm) : 0;
    if (seg != segment) {
      segment = seg;
      double v = method.fitted() ? schedule.omegas[static_cast<std::size_t>(seg)] * static_cast<double>(h) : 0.0;
      b = method_weights<Real>(method, v);
    }
    const std::size_t n = static_cast<std::size_t>(m - 14);
    Real ynew = step<Real>(std::span<const Real, 14>(tr.y.data() + n, 14),
                           std::span<const Real, 13>(tr.f.data() + n + 1, 13), b, h);
    tr.y.push_back(ynew);
    tr.f.push_back(p.rhs(tr.t[static_cast<std::size_t>(m)], ynew));
    ++tr.rhs_evals;
  }
  return tr;
}

}  // namespace oscint
