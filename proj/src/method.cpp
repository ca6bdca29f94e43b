#include "oscint/method.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace oscint {

std::string method_name(MethodId m) {
  if (!m.fitted()) return "classical";
  return "pfd" + std::to_string(m.derivative_count());
}

MethodId parse_method(std::string_view name) {
  std::string s;
  for (char c : name)
    if (c != '-' && c != '_') s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "classical" || s == "qt") return MethodId::classical();
  if (s.size() == 4 && s.compare(0, 3, "pfd") == 0 && s[3] >= '0' && s[3] <= '6')
    return MethodId::pfd(s[3] - '0');
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

}  // namespace oscint
