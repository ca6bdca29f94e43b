#pragma once

#include "oscint/coefficients.hpp"

#include <array>
#include <complex>
#include <functional>
#include <vector>

namespace oscint {

inline constexpr double tol_mod = 1e-8;

// Degree-14 self-reciprocal polynomial sum_k c_k z^k (c_k = c_{14-k}).
struct CharacteristicPolynomial {
  std::array<double, 15> c{};
};

CharacteristicPolynomial characteristic_polynomial(const CoefficientSet& coeffs, double s);

// The 14 roots, as eigenvalues of the (balanced) companion matrix.
std::vector<std::complex<double>> polynomial_roots(const CharacteristicPolynomial& p);

struct StabilityReport {
  bool stable = false;
  double max_modulus = 0;  // largest |z| over the 14 roots
  // roots of the reduced degree-7 polynomial in w = z + 1/z
  std::vector<std::complex<double>> w_roots;
};

// Stable iff every root lies on the unit circle within tolerance (roots of a
// palindromic polynomial come in pairs z, 1/z, so "inside the closed disc" and
// "on the circle" coincide). Decided on w = z + 1/z: every w must be real and
// in [-2, 2], up to 2*tol_mod.
StabilityReport analyze_stability(const CoefficientSet& coeffs, double s);
bool is_stable(const CoefficientSet& coeffs, double s);

struct GridSpec {
  double s_min = 0, s_max = 10, v_min = 0, v_max = 10;
  int n_s = 400, n_v = 400;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct StabilityGrid {
  double s_min = 0, s_max = 0, v_min = 0, v_max = 0;
  int n_s = 0, n_v = 0;
  std::vector<unsigned char> flags;  // row-major over v: flags[iv * n_s + is]
  std::vector<std::string> failures;  // points that raised and were marked unstable

  double s_at(int is) const;
  double v_at(int iv) const;
  bool at(int is, int iv) const { return flags[static_cast<std::size_t>(iv) * n_s + is] != 0; }
};

StabilityGrid scan_region(MethodId method, const GridSpec& grid);

// Largest s with is_stable on [0, s] (scan of step `scan_step`, then bisection
// to `resolution`), for a method fitted at v (ignored for Classical).
double periodicity_endpoint(MethodId method, double v, double s_hi = 2.0, double scan_step = 1e-3,
                            double resolution = 1e-4);

}  // namespace oscint
