#include "oscint/io.hpp"

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oscint {

namespace fs = std::filesystem;

void atomic_write(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot rename onto " + path.string());
  }
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_header(const std::vector<std::string>& columns) {
  std::string s = std::string("# ") + version_string + "\n";
  for (std::size_t k = 0; k < columns.size(); ++k) s += (k ? "," : "") + columns[k];
  return s + "\n";
}

namespace {

// JSON has no nan/inf; emit null for those.
nlohmann::json num(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); }

}  // namespace

nlohmann::json to_json(const CoefficientSet& c) {
  nlohmann::json j;
  j["version"] = version_string;
  j["method"] = method_name(c.method);
  j["v"] = c.v;
  j["a"] = nlohmann::json::array();
  j["b"] = nlohmann::json::array();
  for (double x : c.a) j["a"].push_back(num(x));
  for (double x : c.b) j["b"].push_back(num(x));
  j["precision_bits_used"] = c.precision_bits_used;
  return j;
}

nlohmann::json to_json(const ExactCoefficientSet& c) {
  nlohmann::json j = to_json(to_double(c));
  nlohmann::json exact;
  exact["a"] = nlohmann::json::array();
  exact["b"] = nlohmann::json::array();
  for (const auto& q : c.a) exact["a"].push_back(to_string(q));
  for (const auto& q : c.b) exact["b"].push_back(to_string(q));
  j["exact"] = exact;
  return j;
}

std::string to_csv(const CoefficientSet& c) {
  std::string s = csv_header({"method", "v", "j", "a", "b", "precision_bits_used"});
  for (int k = 0; k < 15; ++k)
    s += method_name(c.method) + "," + format_double(c.v) + "," + std::to_string(k) + "," +
         format_double(c.a[k]) + "," + format_double(c.b[k]) + "," + std::to_string(c.precision_bits_used) + "\n";
  return s;
}

std::string to_csv(const Trajectory<double>& tr) {
  std::string s = csv_header({"t", "y"});
  for (std::size_t k = 0; k < tr.t.size(); ++k) s += format_double(tr.t[k]) + "," + format_double(tr.y[k]) + "\n";
  return s;
}

nlohmann::json to_json(const Trajectory<double>& tr) {
  nlohmann::json j;
  j["version"] = version_string;
  j["method"] = method_name(tr.method);
  j["h"] = tr.h;
  j["rhs_evals"] = tr.rhs_evals;
  j["t"] = nlohmann::json::array();
  j["y"] = nlohmann::json::array();
  for (double x : tr.t) j["t"].push_back(num(x));
  for (double x : tr.y) j["y"].push_back(num(x));
  return j;
}

std::string to_csv(const StabilityGrid& g) {
  std::string s = csv_header({"s", "v", "stable"});
  for (int iv = 0; iv < g.n_v; ++iv)
    for (int is = 0; is < g.n_s; ++is)
      s += format_double(g.s_at(is)) + "," + format_double(g.v_at(iv)) + "," + (g.at(is, iv) ? "1" : "0") + "\n";
  return s;
}

std::vector<std::string> bench_columns() {
  return {"E", "method", "h", "steps", "rhs_evals", "tan_delta", "delta", "digits", "omega_convention"};
}

std::string to_csv_row(const BenchRow& r) {
  return format_double(r.E) + "," + method_name(r.method) + "," + format_double(r.h) + "," +
         std::to_string(r.result.steps) + "," + std::to_string(r.result.rhs_evals) + "," +
         format_double(r.result.tan_delta) + "," + format_double(r.result.delta) + "," +
         format_double(r.result.digits) + "," + convention_name(r.convention) + "\n";
}

nlohmann::json to_json(const BenchRow& r) {
  nlohmann::json j;
  j["E"] = r.E;
  j["method"] = method_name(r.method);
  j["h"] = r.h;
  j["steps"] = r.result.steps;
  j["rhs_evals"] = r.result.rhs_evals;
  j["tan_delta"] = num(r.result.tan_delta);
  j["delta"] = num(r.result.delta);
  j["digits"] = num(r.result.digits);
  j["omega_convention"] = convention_name(r.convention);
  j["pair_used"] = {r.result.pair_used.first, r.result.pair_used.second};
  return j;
}

}  // namespace oscint
