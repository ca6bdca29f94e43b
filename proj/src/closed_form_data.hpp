#pragma once

namespace oscint::detail {

struct closed_form_entry {
  const char* scale;  // rational "p/q"
  int pv, pc, ps;     // exponents of v, cos(v/2), sin(v/2)
  const char* inner;  // nullptr: recovered from the fitting conditions
};

struct series_term {
  int method;  // i of PF-Di
  int j;       // 1..7
  int power;
  const char* value;  // rational "p/q"
};

extern const closed_form_entry closed_form_table[7][7];
extern const int cancellation_order_reduced[7];
extern const series_term series_table[];
extern const int series_table_size;

}  // namespace oscint::detail
