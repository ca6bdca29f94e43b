#include "oscint/stability.hpp"
#include "oscint/errors.hpp"
#include "oscint/phaselag.hpp"

#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace oscint {

CharacteristicPolynomial characteristic_polynomial(const CoefficientSet& coeffs, double s) {
  auto A = stencil_weights_t(coeffs.b, s);
  if (std::abs(A[7]) < 1e-14) throw LeadingCoefficientZero("A_7 vanishes at s = " + std::to_string(s));
  CharacteristicPolynomial p;
  for (int k = 0; k < 15; ++k) p.c[k] = A[std::abs(k - 7)];
  return p;
}

namespace {

template <int Deg, class Vec>
std::vector<std::complex<double>> roots_of(const Vec& coeffs) {
  Eigen::PolynomialSolver<double, Deg> solver(coeffs);
  std::vector<std::complex<double>> out;
  for (Eigen::Index k = 0; k < solver.roots().size(); ++k) {
    auto z = solver.roots()[k];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw ConvergenceFailure("companion eigenvalue iteration did not converge");
    out.push_back(z);
  }
  return out;
}

}  // namespace

std::vector<std::complex<double>> polynomial_roots(const CharacteristicPolynomial& p) {
  if (p.c[14] == 0) throw LeadingCoefficientZero("leading coefficient is zero");
  Eigen::Matrix<double, 15, 1> c;
  for (int k = 0; k < 15; ++k) c[k] = p.c[k];
  return roots_of<14>(c);
}

StabilityReport analyze_stability(const CoefficientSet& coeffs, double s) {
  auto A = stencil_weights_t(coeffs.b, s);
  if (std::abs(A[7]) < 1e-14) throw LeadingCoefficientZero("A_7 vanishes at s = " + std::to_string(s));
  // z^-7 P(z) = A_0 + sum_j A_j (z^j + z^-j), and z^j + z^-j = T_j(w) with
  // T_0 = 2, T_1 = w, T_{j+1} = w T_j - T_{j-1}.
  using Poly = Eigen::Matrix<double, 8, 1>;
  std::array<Poly, 8> T;
  T[0].setZero();
  T[0][0] = 2;
  T[1].setZero();
  T[1][1] = 1;
  for (int j = 1; j < 7; ++j) {
    Poly next = Poly::Zero();
    for (int k = 0; k < 7; ++k) next[k + 1] += T[j][k];
    T[j + 1] = next - T[j - 1];
  }
  Poly q = Poly::Zero();
  q[0] = A[0];
  for (int j = 1; j <= 7; ++j) q += A[j] * T[j];

  StabilityReport r;
  r.w_roots = roots_of<7>(q);
  r.stable = true;
  for (auto w : r.w_roots) {
    std::complex<double> d = std::sqrt(w * w - 4.0);
    double m = std::max(std::abs((w + d) / 2.0), std::abs((w - d) / 2.0));
    r.max_modulus = std::max(r.max_modulus, m);
    if (std::abs(w.imag()) > 2 * tol_mod || std::abs(w.real()) > 2 + 2 * tol_mod) r.stable = false;
  }
  return r;
}

bool is_stable(const CoefficientSet& coeffs, double s) { return analyze_stability(coeffs, s).stable; }

double StabilityGrid::s_at(int is) const {
  return n_s > 1 ? s_min + (s_max - s_min) * is / (n_s - 1) : s_min;
}
double StabilityGrid::v_at(int iv) const {
  return n_v > 1 ? v_min + (v_max - v_min) * iv / (n_v - 1) : v_min;
}

namespace {

CoefficientSet coefficients_for_scan(MethodId m, double v, double v_max) {
  if (m.fitted() && v == 0) {
    // the v -> 0 limit of every fitted method is the classical method
    CoefficientSet c;
    c.method = m;
    c.a = coefficients(MethodId::classical(), 0).a;
    c.b = mirror(taylor_b_t(m, 0.0));
    return c;
  }
  CoefficientOptions opt;
  opt.v_max = std::max(opt.v_max, v_max);
  return coefficients(m, v, opt);
}

}  // namespace

StabilityGrid scan_region(MethodId method, const GridSpec& grid) {
  if (grid.n_s < 2 || grid.n_v < 2) throw std::invalid_argument("grid sizes must be >= 2");
  StabilityGrid g;
  g.s_min = grid.s_min;
  g.s_max = grid.s_max;
  g.v_min = grid.v_min;
  g.v_max = grid.v_max;
  g.n_s = grid.n_s;
  g.n_v = grid.n_v;
  g.flags.assign(static_cast<std::size_t>(g.n_s) * g.n_v, 0);

  std::mutex mu;
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int iv; (iv = next.fetch_add(1)) < g.n_v;) {
      double v = g.v_at(iv);
      CoefficientSet c;
      try {
        c = coefficients_for_scan(method.fitted() ? method : MethodId::classical(), v, g.v_max);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lk(mu);
        g.failures.push_back("v=" + std::to_string(v) + ": " + e.what());
        continue;  // row stays unstable
      }
      for (int is = 0; is < g.n_s; ++is) {
        double s = g.s_at(is);
        try {
          g.flags[static_cast<std::size_t>(iv) * g.n_s + is] = is_stable(c, s) ? 1 : 0;
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lk(mu);
          g.failures.push_back("s=" + std::to_string(s) + " v=" + std::to_string(v) + ": " + e.what());
        }
      }
    }
  };
  unsigned n = grid.threads ? grid.threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(g.n_v));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(g.failures.begin(), g.failures.end());
  return g;
}

double periodicity_endpoint(MethodId method, double v, double s_hi, double scan_step,
                            double resolution) {
  CoefficientSet c = method.fitted() ? coefficients_for_scan(method, v, v) : coefficients(method, 0);
  double lo = 0;
  double hi = -1;
  const int n = static_cast<int>(std::floor(s_hi / scan_step + 1e-9));
  for (int k = 1; k <= n; ++k) {
    const double s = k * scan_step;
    if (!is_stable(c, s)) {
      hi = s;
      break;
    }
    lo = s;
  }
  if (hi < 0) return s_hi;
  while (hi - lo > resolution) {
    double mid = 0.5 * (lo + hi);
    (is_stable(c, mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace oscint
