#include "closed_form_data.hpp"
#include "expr.hpp"
#include "oscint/coefficients.hpp"
#include "oscint/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>

namespace oscint {

namespace {

template <class T>
T rational_to(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if constexpr (std::is_floating_point_v<T>) {
    // route through a wide tier so that the final rounding is the only one
    using W = ext_float<40>;
    return static_cast<T>(W(numerator(q).str()) / W(denominator(q).str()));
  } else {
    return T(numerator(q).str()) / T(denominator(q).str());
  }
}

struct compiled_method {
  detail::expression_set set;
  std::array<int, 7> program{};  // -1: recovered from the fitting conditions
  std::array<Rational, 7> scale;
};

const compiled_method& compiled(int i) {
  static const std::array<compiled_method, 7> table = [] {
    std::array<compiled_method, 7> t;
    for (int m = 0; m < 7; ++m) {
      for (int j = 0; j < 7; ++j) {
        const auto& e = detail::closed_form_table[m][j];
        if (!e.inner) {
          t[m].program[j] = -1;
          continue;
        }
        t[m].program[j] = t[m].set.add(e.inner);
        t[m].scale[j] = parse_rational(e.scale);
      }
    }
    return t;
  }();
  return table[i];
}

// series[i][j] = list of (power, coefficient)
using series_t = std::array<std::array<std::vector<std::pair<int, Rational>>, 7>, 7>;

const series_t& series() {
  static const series_t s = [] {
    series_t out;
    for (int k = 0; k < detail::series_table_size; ++k) {
      const auto& t = detail::series_table[k];
      out[t.method][t.j - 1].emplace_back(t.power, parse_rational(t.value));
    }
    return out;
  }();
  return s;
}

template <class T>
std::array<T, 7> classical_half() {
  static const std::array<T, 7> b = [] {
    auto c = classical_coefficients();
    std::array<T, 7> h;
    for (int j = 1; j <= 7; ++j) h[j - 1] = rational_to<T>(c.b[j]);
    return h;
  }();
  return b;
}

template <class T>
const std::array<std::vector<std::pair<int, T>>, 7>& series_in(int i) {
  static const auto table = [] {
    std::array<std::array<std::vector<std::pair<int, T>>, 7>, 7> t;
    const auto& s = series();
    for (int m = 0; m < 7; ++m)
      for (int j = 0; j < 7; ++j)
        for (const auto& [p, c] : s[m][j]) t[m][j].emplace_back(p, rational_to<T>(c));
    return t;
  }();
  return table[i];
}

// d^d/ds^d cos(k s)
template <class T>
T dcos(int k, int d, const T& s) {
  using std::cos;
  using std::sin;
  T f = detail::ipow(T(k), d);
  T x = T(k) * s;
  switch (d % 4) {
    case 0: return f * cos(x);
    case 1: return -f * sin(x);
    case 2: return -f * cos(x);
    default: return f * sin(x);
  }
}

template <class T>
std::array<T, 7> solve7(std::array<std::array<T, 8>, 7> m) {
  using std::abs;
  for (int c = 0; c < 7; ++c) {
    int piv = c;
    for (int r = c + 1; r < 7; ++r)
      if (abs(m[r][c]) > abs(m[piv][c])) piv = r;
    std::swap(m[c], m[piv]);
    if (m[c][c] == 0) throw PrecisionInsufficient("fitting system is singular at this precision");
    for (int r = c + 1; r < 7; ++r) {
      T f = m[r][c] / m[c][c];
      for (int k = c; k < 8; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::array<T, 7> x;
  for (int r = 6; r >= 0; --r) {
    T acc = m[r][7];
    for (int k = r + 1; k < 7; ++k) acc -= m[r][k] * x[k];
    x[r] = acc / m[r][r];
  }
  return x;
}

}  // namespace

template <class T>
std::array<T, 7> fitting_system_b_t(MethodId m, const T& v) {
  if (!m.fitted()) return classical_half<T>();
  const int i = m.derivative_count();
  std::array<std::array<T, 8>, 7> sys;
  for (auto& row : sys) row.fill(T(0));
  int r = 0;
  // even order conditions, centred at j = 7 (odd ones hold by symmetry)
  for (int q = 2; q <= 2 * (6 - i); q += 2, ++r) {
    T fq = 1, fq2 = 1;
    for (int k = 2; k <= q; ++k) fq *= k;
    for (int k = 2; k <= q - 2; ++k) fq2 *= k;
    T rhs = 0;
    for (int j = 0; j < 15; ++j)
      if (a_pattern[j]) rhs += detail::ipow(T(j - 7), q) * T(a_pattern[j]);
    sys[r][7] = rhs / fq;
    for (int j = 1; j < 14; ++j) {
      int idx = std::min(j, 14 - j);
      sys[r][idx - 1] += (q == 2 ? T(1) : detail::ipow(T(j - 7), q - 2)) / fq2;
    }
  }
  // N(s) = A_0 + 2 sum_k A_k cos(k s) and its first i derivatives vanish at v
  for (int d = 0; d <= i; ++d, ++r) {
    T rhs = 0;
    for (int k = 0; k <= 7; ++k) {
      T w = k == 0 ? T(1) : T(2);
      int a = a_pattern[7 - k];
      if (a) rhs -= w * T(a) * dcos(k, d, v);
      if (7 - k >= 1) {
        // d^d [s^2 cos(ks)] by Leibniz
        T g = v * v * dcos(k, d, v);
        if (d >= 1) g += T(2 * d) * v * dcos(k, d - 1, v);
        if (d >= 2) g += T(d * (d - 1)) * dcos(k, d - 2, v);
        sys[r][7 - k - 1] += w * g;
      }
    }
    sys[r][7] = rhs;
  }
  return solve7(sys);
}

template <class T>
std::array<T, 7> closed_form_b_t(MethodId m, const T& v) {
  if (!m.fitted()) return classical_half<T>();
  using std::cos;
  using std::sin;
  const int i = m.derivative_count();
  const compiled_method& cm = compiled(i);
  std::vector<T> inner = detail::evaluate_all(cm.set, v);
  T half = v / 2;
  T c = cos(half), s = sin(half);
  std::array<T, 7> b;
  bool need_fit = false;
  for (int j = 0; j < 7; ++j) {
    if (cm.program[j] < 0) {
      need_fit = true;
      continue;
    }
    const auto& e = detail::closed_form_table[i][j];
    b[j] = rational_to<T>(cm.scale[j]) * detail::ipow(v, e.pv) * detail::ipow(c, e.pc) *
           detail::ipow(s, e.ps) * inner[static_cast<std::size_t>(cm.program[j])];
  }
  if (need_fit) {
    auto f = fitting_system_b_t(m, v);
    for (int j = 0; j < 7; ++j)
      if (cm.program[j] < 0) b[j] = f[j];
  }
  return b;
}

template <class T>
std::array<T, 7> taylor_b_t(MethodId m, const T& v) {
  if (!m.fitted()) return classical_half<T>();
  const auto& s = series_in<T>(m.derivative_count());
  T v2 = v * v;
  std::array<T, 7> b;
  for (int j = 0; j < 7; ++j) {
    // Horner in v^2 over the (even) powers present
    int top = s[j].empty() ? 0 : s[j].back().first;
    T acc = 0;
    for (int p = top; p >= 0; p -= 2) {
      acc *= v2;
      for (const auto& [pw, c] : s[j])
        if (pw == p) acc += c;
    }
    b[j] = acc;
  }
  return b;
}

template <class T>
std::array<T, 15> coefficients_b_t(MethodId m, const T& v, double v_switch) {
  if (!m.fitted()) return mirror(classical_half<T>());
  if (v < T(v_switch)) return mirror(taylor_b_t(m, v));
  return mirror(closed_form_b_t(m, v));
}

Rational taylor_coefficient(MethodId m, int j, int power) {
  if (!m.fitted()) return power == 0 ? classical_coefficients().b[j] : Rational(0);
  for (const auto& [p, c] : series()[m.derivative_count()][j - 1])
    if (p == power) return c;
  return Rational(0);
}

std::array<double, 7> taylor_b(MethodId m, double v) {
  if (!std::isfinite(v) || std::abs(v) > taylor_validity_radius)
    throw OutOfValidityRange("taylor_b: |v| = " + std::to_string(v) + " exceeds validity radius " +
                             std::to_string(taylor_validity_radius));
  return taylor_b_t(m, v);
}

// --- precision management -------------------------------------------------

int tier_bits(int k) {
  return with_tier(k, [](auto x) { return precision_bits_of<decltype(x)>(); });
}

int tier_for_bits(int bits) {
  for (int k = 0; k < tier_count; ++k)
    if (tier_bits(k) >= bits) return k;
  return -1;
}

int precision_floor() {
  if (const char* env = std::getenv("OSCINT_PRECISION_BITS")) {
    char* end = nullptr;
    long b = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && b > 0) return static_cast<int>(b);
  }
  return 128;
}

CancellationProfile cancellation_profile(MethodId m) {
  static constexpr int full[7] = {14, 25, 33, 38, 40, 39, 35};
  CancellationProfile p;
  p.method = m;
  if (!m.fitted()) return p;
  const int i = m.derivative_count();
  p.denominator_zero_order = full[i];
  p.reduced_zero_order = detail::cancellation_order_reduced[i];
  const double pi = boost::math::constants::pi<double>();
  // PF-D0 carries only sin(v/2); the others also carry cos(v/2) or sin(v)
  const double spacing = i == 0 ? 2 * pi : pi;
  for (double x = spacing; x <= pole_search_limit; x += spacing) p.pole_locations.push_back(x);
  return p;
}

int precision_budget(MethodId m, double v, int floor_bits) {
  if (floor_bits < 0) floor_bits = precision_floor();
  if (!m.fitted()) return floor_bits;
  double need = 53 + 20;
  if (v < 1) need += cancellation_profile(m).reduced_zero_order * std::log2(1 / v);
  return std::max(floor_bits, static_cast<int>(std::ceil(need)));
}

namespace {

void check_frequency(MethodId m, double v) {
  if (!(v > 0) || !std::isfinite(v))
    throw InvalidFrequency("fitted frequency must be positive and finite, got " + std::to_string(v));
  const double pi = boost::math::constants::pi<double>();
  const double spacing = m.derivative_count() == 0 ? 2 * pi : pi;
  double k = std::round(v / spacing);
  if (k >= 1 && std::abs(v - k * spacing) < pole_exclusion_radius)
    throw PoleProximity("v = " + std::to_string(v) + " lies within " +
                        std::to_string(pole_exclusion_radius) + " of the pole at " +
                        std::to_string(k * spacing));
}

template <class T>
std::array<T, 7> eval_tier(MethodId m, double v) {
  return closed_form_b_t(m, T(v));
}

}  // namespace

ClosedFormResult closed_form_b(MethodId m, double v, int precision_bits) {
  ClosedFormResult r;
  if (!m.fitted()) {
    r.b = classical_half<double>();
    return r;
  }
  check_frequency(m, v);
  int k = tier_for_bits(std::max(precision_bits, 64));
  if (k < 0)
    throw PrecisionInsufficient("requested " + std::to_string(precision_bits) +
                                " bits exceeds the largest supported tier (" +
                                std::to_string(tier_bits(tier_count - 1)) + ")");
  const int ref = k + 1 < tier_count ? k + 1 : k - 1;
  with_tier(k, [&](auto lo_tag) {
    using LO = decltype(lo_tag);
    auto lo = eval_tier<LO>(m, v);
    with_tier(ref, [&](auto hi_tag) {
      using HI = decltype(hi_tag);
      auto hi = eval_tier<HI>(m, v);
      double err = 0;
      for (int j = 0; j < 7; ++j) {
        HI a(lo[j]);
        HI d = abs(a - hi[j]) / abs(hi[j]);
        err = std::max(err, static_cast<double>(d));
        r.b[j] = static_cast<double>(lo[j]);
      }
      r.error_estimate = err;
    });
  });
  r.precision_bits_used = tier_bits(k);
  if (!(r.error_estimate <= 1e-12))
    throw PrecisionInsufficient("closed form at v = " + std::to_string(v) + " with " +
                                std::to_string(r.precision_bits_used) +
                                " bits has estimated relative error " +
                                std::to_string(r.error_estimate));
  return r;
}

#define OSCINT_INSTANTIATE(T)                                                   \
  template std::array<T, 7> closed_form_b_t<T>(MethodId, const T&);            \
  template std::array<T, 7> fitting_system_b_t<T>(MethodId, const T&);         \
  template std::array<T, 7> taylor_b_t<T>(MethodId, const T&);                 \
  template std::array<T, 15> coefficients_b_t<T>(MethodId, const T&, double);

OSCINT_INSTANTIATE(double)
OSCINT_INSTANTIATE(ext_float<40>)
OSCINT_INSTANTIATE(ext_float<58>)
OSCINT_INSTANTIATE(ext_float<78>)
OSCINT_INSTANTIATE(ext100)
OSCINT_INSTANTIATE(ext_float<116>)
OSCINT_INSTANTIATE(ext_float<155>)
OSCINT_INSTANTIATE(ext_float<232>)
OSCINT_INSTANTIATE(ext_float<309>)
OSCINT_INSTANTIATE(ext_float<463>)
OSCINT_INSTANTIATE(ext_float<617>)
OSCINT_INSTANTIATE(ext_float<925>)
OSCINT_INSTANTIATE(ext_float<1234>)

#undef OSCINT_INSTANTIATE

}  // namespace oscint
