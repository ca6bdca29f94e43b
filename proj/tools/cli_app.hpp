#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oscint::cli {

enum ExitCode { ok = 0, usage_error = 2, computational_error = 3 };

// args excludes the program name. Output without --out goes to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace oscint::cli
