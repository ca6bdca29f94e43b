#pragma once

#include "oscint/integrator.hpp"
#include "oscint/method.hpp"

#include <functional>
#include <string>
#include <utility>

namespace oscint {

struct WoodsSaxonParams {
  double u0 = -50;
  double a = 0.6;
  double x0 = 7;
  double u1() const { return -u0 / a; }
};

double woods_saxon(double x, const WoodsSaxonParams& p = {});

// Which local wavenumber the fitted methods use on the inner segment.
enum class OmegaConvention {
  Paper,     // sqrt(E - 50) on [0, 6.5] (default)
  Physical,  // sqrt(E + 50) on [0, 6.5], the local wavenumber in the well
};

std::string convention_name(OmegaConvention c);
OmegaConvention parse_convention(const std::string& s);

struct RadialScatteringProblem {
  int l = 0;
  double E = 0;
  double x_end = 15;
  double h = 15.0 / 2000;
  WoodsSaxonParams potential;
  // Replaces the Woods-Saxon potential when set (e.g. V = 0 for a free particle).
  std::function<double(double)> custom_potential;

  double V(double x) const { return custom_potential ? custom_potential(x) : woods_saxon(x, potential); }
};

double schrodinger_rhs(double x, double y, const RadialScatteringProblem& p);

double spherical_bessel_j(int l, double x);
double spherical_neumann_n(int l, double x);

// [y_i S(x_{i+1}) - y_{i+1} S(x_i)] / [y_{i+1} C(x_i) - y_i C(x_{i+1})],
// S(x) = kx j_l(kx), C(x) = kx n_l(kx).
double tan_delta(double y_i, double y_ip1, double x_i, double x_ip1, double k, int l);
// Denominator of the above (its magnitude measures the pair's conditioning).
double tan_delta_denominator(double y_i, double y_ip1, double x_i, double x_ip1, double k, int l);

struct PhaseShiftResult {
  double tan_delta = 0;
  double delta = 0;   // folded into [0, pi)
  double digits = 0;  // -log10 |delta - reference|, capped at digits_cap
  std::pair<double, double> pair_used{0, 0};
  long steps = 0;
  std::size_t rhs_evals = 0;
};

inline constexpr double digits_cap = 16;

struct PhaseShiftOptions {
  OmegaConvention convention = OmegaConvention::Paper;
  double switch_point = 6.5;
  double pair_window_lo = 13.5;
  double reference_delta = 1.5707963267948966;  // pi/2 at the resonance energies
};

FrequencySchedule schrodinger_schedule(const RadialScatteringProblem& p, OmegaConvention c,
                                       double switch_point = 6.5);

// Integrates the radial equation from the origin and extracts the phase shift
// from the best-conditioned consecutive pair of grid points in the window.
PhaseShiftResult solve_phase_shift(const RadialScatteringProblem& p, MethodId method,
                                   const PhaseShiftOptions& opt = {});

// Phase shift from an already computed trajectory using the pair (i, i+1).
PhaseShiftResult phase_shift_from_pair(const Trajectory<double>& tr, std::size_t i, double k, int l,
                                       double reference_delta);

// Trajectory for the problem (used by solve_phase_shift and the pair checks).
Trajectory<double> integrate_radial(const RadialScatteringProblem& p, MethodId method,
                                    const PhaseShiftOptions& opt = {}, double y_scale = 1);

}  // namespace oscint
