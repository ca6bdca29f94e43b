#include "expr.hpp"

#include <cctype>
#include <stdexcept>

namespace oscint::detail {

class parser {
 public:
  parser(expression_set& set, std::string_view src) : set_(set), s_(src) {}

  code_t parse() {
    code_t out;
    expr(out);
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return out;
  }

 private:
  expression_set& set_;
  std::string_view s_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument(std::string("expression: ") + what + " at offset " +
                                std::to_string(i_));
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  long long integer() {
    skip();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected integer");
    long long n = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      if (n > (INT64_MAX - 9) / 10) fail("integer literal overflow");
      n = n * 10 + (s_[i_++] - '0');
    }
    return n;
  }

  void expr(code_t& out) {
    term(out);
    for (;;) {
      if (eat('+')) { term(out); out.push_back({opcode::add, 0}); }
      else if (eat('-')) { term(out); out.push_back({opcode::sub, 0}); }
      else return;
    }
  }
  void term(code_t& out) {
    unary(out);
    for (;;) {
      if (eat('*')) { unary(out); out.push_back({opcode::mul, 0}); }
      else if (eat('/')) { unary(out); out.push_back({opcode::div, 0}); }
      else return;
    }
  }
  void unary(code_t& out) {
    if (eat('-')) {
      unary(out);
      out.push_back({opcode::neg, 0});
    } else if (eat('+')) {
      unary(out);
    } else {
      power(out);
    }
  }
  void power(code_t& out) {
    atom(out);
    if (eat('^')) out.push_back({opcode::powi, integer()});
  }
  void atom(code_t& out) {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      out.push_back({opcode::konst, integer()});
    } else if (eat('(')) {
      expr(out);
      if (!eat(')')) fail("expected ')'");
    } else if (s_.substr(i_, 4) == "sin(" || s_.substr(i_, 4) == "cos(") {
      bool is_sin = s_[i_] == 's';
      i_ += 4;
      std::size_t start = i_;
      int depth = 1;
      while (i_ < s_.size() && depth) {
        if (s_[i_] == '(') ++depth;
        else if (s_[i_] == ')') --depth;
        ++i_;
      }
      if (depth) fail("unbalanced function call");
      out.push_back({opcode::slot, set_.intern_slot(is_sin, s_.substr(start, i_ - 1 - start))});
    } else if (c == 'v') {
      ++i_;
      out.push_back({opcode::var, 0});
    } else {
      fail("unexpected character");
    }
  }
};

int expression_set::intern_slot(bool is_sin, std::string_view arg_text) {
  // canonical key: argument without whitespace or redundant outer parentheses
  std::string key;
  for (char c : arg_text)
    if (!std::isspace(static_cast<unsigned char>(c))) key.push_back(c);
  while (key.size() > 2 && key.front() == '(' && key.back() == ')') {
    int depth = 0;
    bool wraps = true;
    for (std::size_t k = 0; k + 1 < key.size(); ++k) {
      depth += key[k] == '(' ? 1 : key[k] == ')' ? -1 : 0;
      if (depth == 0) { wraps = false; break; }
    }
    if (!wraps) break;
    key = key.substr(1, key.size() - 2);
  }
  std::string full = (is_sin ? "s:" : "c:") + key;
  for (std::size_t k = 0; k < slot_keys_.size(); ++k)
    if (slot_keys_[k] == full) return static_cast<int>(k);
  code_t arg = parser(*this, key).parse();
  slots_.push_back({is_sin, std::move(arg)});
  slot_keys_.push_back(std::move(full));
  return static_cast<int>(slots_.size() - 1);
}

int expression_set::add(std::string_view src) {
  programs_.push_back(parser(*this, src).parse());
  return static_cast<int>(programs_.size() - 1);
}

}  // namespace oscint::detail
