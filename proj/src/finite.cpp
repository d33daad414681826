#include "qck/finite.hpp"

#include <cassert>
#include <stdexcept>

namespace qck {

OperatorLabel parse_op(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'e' && s[0] != 'f')) throw std::invalid_argument("bad operator: " + s);
  int idx = std::stoi(s.substr(1));
  if (idx == 0) throw std::invalid_argument("bad operator index: " + s);
  return {s[0], idx};
}

std::string to_string(const OperatorLabel& op) { return std::string(1, op.kind) + std::to_string(op.index); }

std::vector<OperatorLabel> all_ops(int n, char kind) {
  std::vector<OperatorLabel> ops;
  for (int i = 1; i < n; ++i) ops.push_back({kind, i});
  ops.push_back({kind, -1});
  return ops;
}

ShiftedTableau lowest_generator(const Shape& shape, int n) {
  if (shape.rows() > n) throw std::invalid_argument("shape has more rows than the rank");
  Grid rows(shape.rows());
  int nr = shape.rows();
  for (int r = 0; r < nr; ++r) rows[r].assign(shape.parts[r], nr - r);
  return ShiftedTableau(n, std::move(rows));
}

namespace {

ShiftedTableau with_cell(const ShiftedTableau& t, int r, int c, int letter) {
  Grid rows = t.grid();
  rows[r][c] = letter;
  return ShiftedTableau(t.rank(), std::move(rows));
}

void check_index(const ShiftedTableau& t, int i) {
  if (i != -1 && (i < 1 || i > t.rank() - 1)) throw std::out_of_range("operator index");
}

// Cell acted on by the odd operators: the leftmost letter of rd_1, provided
// it equals want (2 for e, 1 for f).
std::optional<TaggedLetter> odd_target(const ShiftedTableau& t, int want) {
  if (t.rank() < 2) return std::nullopt;  // no letter 2 exists at rank 1
  TaggedWord w = restricted_word(t, 1);
  if (w.empty() || w.front().letter != want) return std::nullopt;
  return w.front();
}

}  // namespace

std::optional<ShiftedTableau> apply_finite(const ShiftedTableau& t, const OperatorLabel& op) {
  check_index(t, op.index);
  std::optional<ShiftedTableau> result;
  if (op.index == -1) {
    if (op.kind == 'e') {
      auto cell = odd_target(t, 2);
      if (!cell) return std::nullopt;
      result = with_cell(t, cell->row, cell->col, 1);
    } else {
      auto cell = odd_target(t, 1);
      if (!cell) return std::nullopt;
      result = with_cell(t, cell->row, cell->col, 2);
    }
  } else {
    int i = op.index;
    TaggedWord surv = red_word(t, i);
    if (op.kind == 'e') {
      for (const auto& x : surv)
        if (x.letter == i + 1) {
          result = with_cell(t, x.row, x.col, i);
          break;
        }
    } else {
      for (auto it = surv.rbegin(); it != surv.rend(); ++it)
        if (it->letter == i) {
          result = with_cell(t, it->row, it->col, i + 1);
          break;
        }
    }
    if (!result) return std::nullopt;
  }
  assert(is_valid_sdt(*result));
  return result;
}

int eps_finite(const ShiftedTableau& t, int i) {
  check_index(t, i);
  if (i == -1) return odd_target(t, 2) ? 1 : 0;
  int count = 0;
  for (const auto& x : red_word(t, i))
    if (x.letter == i + 1) ++count;
  return count;
}

int phi_finite(const ShiftedTableau& t, int i) {
  check_index(t, i);
  if (i == -1) return odd_target(t, 1) ? 1 : 0;
  int count = 0;
  for (const auto& x : red_word(t, i))
    if (x.letter == i) ++count;
  return count;
}

FiniteStats statistics(const ShiftedTableau& t, int i) {
  return {eps_finite(t, i), phi_finite(t, i), content(t)};
}

bool is_extremal(const ShiftedTableau& t, Side side) {
  char kind = side == Side::lowest ? 'f' : 'e';
  for (const auto& op : all_ops(t.rank(), kind))
    if (apply_finite(t, op)) return false;
  return true;
}

}  // namespace qck
