#pragma once

// Tiny compiler for the stored closed-form expressions: infix text over the
// single variable v with integer literals, + - * /, integer powers '^' and
// sin()/cos(). Compiled once to postfix code; trigonometric calls are
// deduplicated across all expressions of a set and evaluated once per call.

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace oscint::detail {

enum class opcode : std::uint8_t { konst, var, add, sub, mul, div, neg, powi, slot };

struct instr {
  opcode op;
  std::int64_t arg;
};

using code_t = std::vector<instr>;

class expression_set {
 public:
  // Returns the index of the compiled expression. Throws std::invalid_argument.
  int add(std::string_view src);

  struct trig {
    bool is_sin;
    code_t arg;
  };

  const std::vector<code_t>& programs() const { return programs_; }
  const std::vector<trig>& slots() const { return slots_; }

 private:
  std::vector<code_t> programs_;
  std::vector<trig> slots_;
  std::vector<std::string> slot_keys_;

  friend class parser;
  int intern_slot(bool is_sin, std::string_view arg_text);
};

template <class T>
T ipow(T x, long long n) {
  if (n < 0) return T(1) / ipow(x, -n);
  T r(1);
  while (n) {
    if (n & 1) r *= x;
    n >>= 1;
    if (n) x *= x;
  }
  return r;
}

template <class T>
T run(const code_t& code, const T& v, const std::vector<T>& slot_values, std::vector<T>& stack) {
  stack.clear();
  for (const instr& in : code) {
    switch (in.op) {
      case opcode::konst: stack.emplace_back(static_cast<long long>(in.arg)); break;
      case opcode::var: stack.push_back(v); break;
      case opcode::slot: stack.push_back(slot_values[static_cast<std::size_t>(in.arg)]); break;
      case opcode::neg: stack.back() = -stack.back(); break;
      case opcode::powi: stack.back() = ipow(stack.back(), in.arg); break;
      default: {
        T rhs = std::move(stack.back());
        stack.pop_back();
        T& lhs = stack.back();
        if (in.op == opcode::add) lhs += rhs;
        else if (in.op == opcode::sub) lhs -= rhs;
        else if (in.op == opcode::mul) lhs *= rhs;
        else lhs /= rhs;
      }
    }
  }
  return stack.back();
}

// Evaluates every expression of the set at v.
template <class T>
std::vector<T> evaluate_all(const expression_set& set, const T& v) {
  using std::cos;
  using std::sin;
  std::vector<T> stack;
  stack.reserve(64);
  std::vector<T> slot_values;
  slot_values.reserve(set.slots().size());
  for (const auto& s : set.slots()) {
    T x = run(s.arg, v, slot_values, stack);
    slot_values.push_back(s.is_sin ? T(sin(x)) : T(cos(x)));
  }
  std::vector<T> out;
  out.reserve(set.programs().size());
  for (const auto& p : set.programs()) out.push_back(run(p, v, slot_values, stack));
  return out;
}

}  // namespace oscint::detail
