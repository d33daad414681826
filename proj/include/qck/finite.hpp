#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qck/tableau.hpp"

namespace qck {

/// Crystal operator label. index is 1..n-1 for the even operators; -1 encodes
/// the odd index (written "e-1" / "f-1" in text form).
struct OperatorLabel {
  char kind;  // 'e' or 'f'
  int index;
  bool operator==(const OperatorLabel&) const = default;
};

OperatorLabel parse_op(const std::string& s);
std::string to_string(const OperatorLabel& op);
std::vector<OperatorLabel> all_ops(int n, char kind);

/// L^lambda: row k from the bottom filled with the letter k.
ShiftedTableau lowest_generator(const Shape& shape, int n);

/// Shape-preserving crystal operator on a valid SDT; nullopt is the crystal
/// zero.
std::optional<ShiftedTableau> apply_finite(const ShiftedTableau& t, const OperatorLabel& op);

/// eps_i = #(i+1) surviving in red_i, phi_i = #i surviving in red_i. For
/// index -1 these are 0/1 applicability indicators.
int eps_finite(const ShiftedTableau& t, int i);
int phi_finite(const ShiftedTableau& t, int i);

struct FiniteStats {
  int eps;
  int phi;
  Weight wt;
};
FiniteStats statistics(const ShiftedTableau& t, int i);

enum class Side { lowest, highest };

/// True iff every f (resp. e) operator, including the odd one, returns zero.
bool is_extremal(const ShiftedTableau& t, Side side);

}  // namespace qck
