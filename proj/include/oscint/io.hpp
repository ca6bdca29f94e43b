#pragma once

#include "oscint/coefficients.hpp"
#include "oscint/integrator.hpp"
#include "oscint/schrodinger.hpp"
#include "oscint/stability.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace oscint {

inline constexpr const char* version_string = "oscint 1.0.0";

// Writes to a sibling temporary file and renames it over `path`, so readers
// never observe a partially written file.
void atomic_write(const std::filesystem::path& path, const std::string& content);

// Round-trip formatting of a double (17 significant digits, "nan"/"inf" kept).
std::string format_double(double x);

// "# oscint 1.0.0" followed by the column names.
std::string csv_header(const std::vector<std::string>& columns);

nlohmann::json to_json(const CoefficientSet& c);
// Adds the exact rationals ("p/q" strings) of the classical method.
nlohmann::json to_json(const ExactCoefficientSet& c);
std::string to_csv(const CoefficientSet& c);

std::string to_csv(const Trajectory<double>& tr);
nlohmann::json to_json(const Trajectory<double>& tr);

std::string to_csv(const StabilityGrid& g);

struct BenchRow {
  double E = 0;
  MethodId method;
  double h = 0;
  PhaseShiftResult result;
  OmegaConvention convention = OmegaConvention::Paper;
};

std::vector<std::string> bench_columns();
std::string to_csv_row(const BenchRow& r);
nlohmann::json to_json(const BenchRow& r);

}  // namespace oscint
