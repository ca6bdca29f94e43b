#include "cli_app.hpp"

#include "oscint/coefficients.hpp"
#include "oscint/io.hpp"
#include "oscint/phaselag.hpp"
#include "oscint/schrodinger.hpp"
#include "oscint/stability.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <mutex>
#include <regex>
#include <stdexcept>
#include <thread>

namespace oscint::cli {

namespace {

// Raised by validation, before any computation starts.
struct usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

MethodId method_arg(const std::string& s) {
  try {
    return parse_method(s);
  } catch (const std::invalid_argument& e) {
    throw usage(e.what());
  }
}

std::vector<MethodId> methods_arg(const std::vector<std::string>& names) {
  std::vector<MethodId> ms;
  for (const auto& n : names) {
    if (n == "all") {
      ms.insert(ms.end(), all_methods.begin(), all_methods.end());
    } else {
      ms.push_back(method_arg(n));
    }
  }
  if (ms.empty()) throw usage("no methods given");
  return ms;
}

OmegaConvention convention_arg(const std::string& s) {
  try {
    return parse_convention(s);
  } catch (const std::invalid_argument& e) {
    throw usage(e.what());
  }
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw usage(msg);
}

void emit(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    atomic_write(path, content);
  }
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// drops the version and column lines of a CSV block
std::string body(const std::string& csv) {
  auto p = csv.find('\n');
  p = csv.find('\n', p + 1);
  return csv.substr(p + 1);
}

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

struct Common {
  std::string format = "csv";
  std::string out;
};

void add_common(CLI::App* sub, Common& c, const std::string& default_format) {
  c.format = default_format;
  sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out, "output file (default: stdout)");
}

// ---- coeffs

struct CoeffsConfig {
  Common io;
  std::string method = "classical";
  std::vector<double> v{0.0};
};

void cmd_coeffs(const CoeffsConfig& c, std::ostream& out) {
  const MethodId m = method_arg(c.method);
  require(!c.v.empty(), "--v needs at least one value");
  for (double v : c.v) {
    require(std::isfinite(v), "--v must be finite");
    if (m.fitted()) require(v > 0, "v must be > 0 for phase-fitted methods");
  }

  nlohmann::json arr = nlohmann::json::array();
  std::string csv;
  for (double v : c.v) {
    CoefficientSet set = coefficients(m, v);
    if (c.io.format == "json") {
      arr.push_back(m.fitted() ? to_json(set) : to_json(classical_coefficients()));
    } else {
      csv += csv.empty() ? to_csv(set) : body(to_csv(set));
    }
  }
  if (c.io.format == "json") {
    emit(dump(arr.size() == 1 ? arr[0] : arr), c.io.out, out);
  } else {
    emit(csv, c.io.out, out);
  }
}

// ---- phaselag

struct PhaseLagConfig {
  Common io;
  std::string method = "classical";
  double v = 0;
  double s_min = 0, s_max = 3;
  int points = 301;
};

void cmd_phaselag(const PhaseLagConfig& c, std::ostream& out) {
  const MethodId m = method_arg(c.method);
  if (m.fitted()) require(c.v > 0, "v must be > 0 for phase-fitted methods");
  require(c.points >= 2, "--points must be >= 2");
  require(c.s_min < c.s_max, "--smin must be below --smax");

  const CoefficientSet set = coefficients(m, m.fitted() ? c.v : 0.0);
  std::string csv = csv_header({"method", "v", "s", "phase_lag"});
  nlohmann::json j;
  j["version"] = version_string;
  j["method"] = method_name(m);
  j["v"] = set.v;
  j["s"] = nlohmann::json::array();
  j["phase_lag"] = nlohmann::json::array();
  for (int k = 0; k < c.points; ++k) {
    const double s = c.s_min + (c.s_max - c.s_min) * k / (c.points - 1);
    const double pl = phase_lag(set, s);
    csv += method_name(m) + "," + format_double(set.v) + "," + format_double(s) + "," + format_double(pl) + "\n";
    j["s"].push_back(s);
    j["phase_lag"].push_back(pl);
  }
  emit(c.io.format == "json" ? dump(j) : csv, c.io.out, out);
}

// ---- stability

struct StabilityConfig {
  Common io;
  std::string method = "classical";
  std::string grid = "400x400";
  double s_min = 0, s_max = 10, v_min = 0, v_max = 10;
  unsigned threads = 0;
};

void cmd_stability(const StabilityConfig& c, std::ostream& out, std::ostream& err) {
  const MethodId m = method_arg(c.method);
  std::smatch g;
  require(std::regex_match(c.grid, g, std::regex(R"((\d+)x(\d+))")), "--grid must look like 400x400");
  GridSpec spec;
  spec.n_s = std::stoi(g[1]);
  spec.n_v = std::stoi(g[2]);
  require(spec.n_s >= 2 && spec.n_v >= 2, "--grid sizes must be >= 2");
  require(c.s_min < c.s_max && c.v_min < c.v_max, "empty scan window");
  require(c.s_min >= 0 && c.v_min >= 0, "scan window must be non-negative");
  spec.s_min = c.s_min;
  spec.s_max = c.s_max;
  spec.v_min = c.v_min;
  spec.v_max = c.v_max;
  spec.threads = c.threads;

  const StabilityGrid grid = scan_region(m, spec);
  if (!grid.failures.empty())
    err << "warning: " << grid.failures.size() << " grid points could not be evaluated (marked unstable)\n";
  if (c.io.format == "json") {
    nlohmann::json j;
    j["version"] = version_string;
    j["method"] = method_name(m);
    j["s"] = {grid.s_min, grid.s_max, grid.n_s};
    j["v"] = {grid.v_min, grid.v_max, grid.n_v};
    j["stable"] = grid.flags;
    j["failures"] = grid.failures;
    emit(dump(j), c.io.out, out);
  } else {
    emit(to_csv(grid), c.io.out, out);
  }
}

// ---- solve / bench

struct SolveConfig {
  Common io;
  std::string method = "classical";
  double E = 0;
  double h = 15.0 / 2000;
  int l = 0;
  std::string convention = "paper";
  std::string trajectory;
};

void validate_problem(double E, double h, int l) {
  require(std::isfinite(E) && E > 0, "--E must be positive");
  require(std::isfinite(h) && h > 0, "--h must be positive");
  require(std::lround(15.0 / h) >= 200, "--h too large (need at least 200 steps on [0, 15])");
  require(l >= 0, "--l must be >= 0");
}

void check_schedule(MethodId m, double E, OmegaConvention conv) {
  if (!m.fitted()) return;
  RadialScatteringProblem p;
  p.E = E;
  try {
    schrodinger_schedule(p, conv);
  } catch (const std::exception& e) {
    throw usage(e.what());
  }
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string s = csv_header(bench_columns());
  for (const auto& r : rows) s += to_csv_row(r);
  return s;
}

void cmd_solve(const SolveConfig& c, std::ostream& out) {
  const MethodId m = method_arg(c.method);
  const OmegaConvention conv = convention_arg(c.convention);
  validate_problem(c.E, c.h, c.l);
  check_schedule(m, c.E, conv);

  RadialScatteringProblem p;
  p.E = c.E;
  p.h = c.h;
  p.l = c.l;
  PhaseShiftOptions opt;
  opt.convention = conv;
  BenchRow row{c.E, m, c.h, solve_phase_shift(p, m, opt), conv};
  if (!c.trajectory.empty()) atomic_write(c.trajectory, to_csv(integrate_radial(p, m, opt)));
  emit(c.io.format == "json" ? dump(to_json(row)) : bench_csv({row}), c.io.out, out);
}

struct BenchConfig {
  Common io;
  std::vector<double> energies{989.701916, 341.495874, 163.215341};
  std::vector<std::string> methods{"all"};
  int h_ladder = 8;
  std::string convention = "paper";
  unsigned threads = 0;
};

void cmd_bench(const BenchConfig& c, std::ostream& out) {
  const std::vector<MethodId> ms = methods_arg(c.methods);
  const OmegaConvention conv = convention_arg(c.convention);
  require(!c.energies.empty(), "--energies needs at least one value");
  require(c.h_ladder >= 1 && c.h_ladder <= 12, "--h-ladder must be in 1..12");
  std::vector<double> hs;
  for (int k = 0; k < c.h_ladder; ++k) hs.push_back(15.0 / (250.0 * std::ldexp(1.0, k)));
  for (double E : c.energies) {
    validate_problem(E, hs.front(), 0);
    for (MethodId m : ms) check_schedule(m, E, conv);
  }

  std::vector<BenchRow> rows;
  for (double E : c.energies)
    for (MethodId m : ms)
      for (double h : hs) rows.push_back({E, m, h, {}, conv});

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < rows.size();) {
      try {
        RadialScatteringProblem p;
        p.E = rows[k].E;
        p.h = rows[k].h;
        PhaseShiftOptions opt;
        opt.convention = conv;
        rows[k].result = solve_phase_shift(p, rows[k].method, opt);
      } catch (...) {
        std::lock_guard<std::mutex> lk(mu);
        if (!failure) failure = std::current_exception();
        next = rows.size();
      }
    }
  };
  const unsigned n = worker_count(c.threads, rows.size());
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  if (c.io.format == "json") {
    nlohmann::json j;
    j["version"] = version_string;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) j["rows"].push_back(to_json(r));
    emit(dump(j), c.io.out, out);
  } else {
    emit(bench_csv(rows), c.io.out, out);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric 14-step integrators for oscillatory problems", "oscint"};
  app.set_help_flag("--help", "print this help");  // -h is taken by the step size
  app.set_version_flag("--version", version_string);
  app.require_subcommand(1);

  CoeffsConfig coeffs;
  auto* sc = app.add_subcommand("coeffs", "dump the weights of a method");
  add_common(sc, coeffs.io, "json");
  sc->add_option("--method", coeffs.method, "classical, pfd0 .. pfd6");
  sc->add_option("--v", coeffs.v, "fitted frequency(ies) v = omega*h, comma separated")->delimiter(',');

  PhaseLagConfig pl;
  auto* sp = app.add_subcommand("phaselag", "phase-lag curve PL(s)");
  add_common(sp, pl.io, "csv");
  sp->add_option("--method", pl.method);
  sp->add_option("--v", pl.v);
  sp->add_option("--smin", pl.s_min);
  sp->add_option("--smax", pl.s_max);
  sp->add_option("--points", pl.points);

  StabilityConfig st;
  auto* ss = app.add_subcommand("stability", "periodicity scan over the (s, v) plane");
  add_common(ss, st.io, "csv");
  ss->add_option("--method", st.method);
  ss->add_option("--grid", st.grid, "NsxNv, e.g. 400x400");
  ss->add_option("--smin", st.s_min);
  ss->add_option("--smax", st.s_max);
  ss->add_option("--vmin", st.v_min);
  ss->add_option("--vmax", st.v_max);
  ss->add_option("--threads", st.threads);

  SolveConfig so;
  auto* sv = app.add_subcommand("solve", "one radial Schroedinger phase-shift run");
  add_common(sv, so.io, "csv");
  sv->add_option("--method", so.method);
  sv->add_option("--E", so.E)->required();
  sv->add_option("--h", so.h);
  sv->add_option("--l", so.l);
  sv->add_option("--omega-convention", so.convention, "paper or physical");
  sv->add_option("--trajectory", so.trajectory, "also write the (t, y) trajectory CSV here");

  BenchConfig be;
  auto* sb = app.add_subcommand("bench", "energies x methods x step-size sweep");
  add_common(sb, be.io, "csv");
  sb->add_option("--energies", be.energies)->delimiter(',');
  sb->add_option("--methods", be.methods, "'all' or a comma separated list")->delimiter(',');
  sb->add_option("--h-ladder", be.h_ladder, "number of steps h_k = 15/(250*2^k)");
  sb->add_option("--omega-convention", be.convention, "paper or physical");
  sb->add_option("--threads", be.threads);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForVersion&) {
    out << version_string << "\n";
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }

  try {
    if (sc->parsed()) cmd_coeffs(coeffs, out);
    if (sp->parsed()) cmd_phaselag(pl, out);
    if (ss->parsed()) cmd_stability(st, out, err);
    if (sv->parsed()) cmd_solve(so, out);
    if (sb->parsed()) cmd_bench(be, out);
  } catch (const usage& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return computational_error;
  }
  return ok;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace oscint::cli
