#include "qck/limit.hpp"

#include <cassert>
#include <stdexcept>

namespace qck {

std::string to_string(Largeness c) {
  switch (c) {
    case Largeness::not_dual_large: return "not_dual_large";
    case Largeness::dual_large: return "dual_large";
    case Largeness::dual_marginally_large: return "dual_marginally_large";
  }
  return "?";
}

namespace {

int leading_run(const std::vector<int>& row, int letter) {
  int c = 0;
  while (c < static_cast<int>(row.size()) && row[c] == letter) ++c;
  return c;
}

// Excess of the leading run of row k (from the top, 0-based) over the row
// below plus one. Row k's expected leading letter is n-k.
int deviation(const Grid& rows, int n, int k) {
  int below = k + 1 < static_cast<int>(rows.size()) ? static_cast<int>(rows[k + 1].size()) : 0;
  return leading_run(rows[k], n - k) - below - 1;
}

void push_in_grid(Grid& rows, int n, int h) {
  if (h < 1 || h > n) throw std::invalid_argument("column height out of range");
  if (h > static_cast<int>(rows.size()) + 1) throw std::invalid_argument("column too tall for tableau");
  if (h == static_cast<int>(rows.size()) + 1) rows.emplace_back();
  for (int k = 0; k < h; ++k) rows[k].insert(rows[k].begin(), n - k);
}

void push_out_grid(Grid& rows, int n, int h) {
  if (h < 1 || h > static_cast<int>(rows.size())) throw std::invalid_argument("no trivial column of that height");
  for (int k = 0; k < h; ++k) {
    if (rows[k].empty() || rows[k][0] != n - k)
      throw std::invalid_argument("no trivial column of that height");
    rows[k].erase(rows[k].begin());
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
}

}  // namespace

Largeness largeness(const ShiftedTableau& t) {
  int n = t.rank();
  if (t.num_rows() != n) return Largeness::not_dual_large;
  const Grid& rows = t.grid();
  bool marginal = true;
  for (int k = 0; k < n; ++k) {
    int d = deviation(rows, n, k);
    if (d < 0) return Largeness::not_dual_large;
    if (d != 0) marginal = false;
  }
  return marginal ? Largeness::dual_marginally_large : Largeness::dual_large;
}

bool is_dml(const ShiftedTableau& t) { return largeness(t) == Largeness::dual_marginally_large; }

ShiftedTableau push_column(const ShiftedTableau& t, int h, bool in) {
  Grid rows = t.grid();
  if (in)
    push_in_grid(rows, t.rank(), h);
  else
    push_out_grid(rows, t.rank(), h);
  return ShiftedTableau(t.rank(), std::move(rows));
}

Grid canonicalize_grid(Grid rows, int n) {
  if (static_cast<int>(rows.size()) != n)
    throw std::runtime_error("not in a marginally large class");
  // Each push of height h shifts the deviation of row n-h alone, so order is
  // immaterial; push-ins first keep every leading run nonempty for push-outs.
  for (int guard = 0; ; ++guard) {
    if (guard > 4 * n * n + 1000 || static_cast<int>(rows.size()) != n)
      throw std::runtime_error("not in a marginally large class");
    int k = 0;
    while (k < n && deviation(rows, n, k) >= 0) ++k;
    if (k < n) {
      push_in_grid(rows, n, k + 1);
      continue;
    }
    k = 0;
    while (k < n && deviation(rows, n, k) == 0) ++k;
    if (k == n) break;
    try {
      push_out_grid(rows, n, k + 1);
    } catch (const std::invalid_argument&) {
      throw std::runtime_error("not in a marginally large class");
    }
  }
  return rows;
}

ShiftedTableau canonicalize(const ShiftedTableau& t) {
  ShiftedTableau out(t.rank(), canonicalize_grid(t.grid(), t.rank()));
  assert(is_valid_sdt(out));
  return out;
}

ShiftedTableau limit_generator(int n) {
  std::vector<int> parts(n);
  for (int k = 0; k < n; ++k) parts[k] = n - k;
  return lowest_generator(Shape::of(parts), n);
}

std::optional<ShiftedTableau> apply_limit(const ShiftedTableau& t, const OperatorLabel& op) {
  if (!is_dml(t)) throw std::invalid_argument("not dual marginally large");
  int n = t.rank();
  Grid rows = t.grid();
  if (op.index == -1) {
    TaggedWord w = n >= 2 ? restricted_word(t, 1) : TaggedWord{};
    int want = op.kind == 'e' ? 2 : 1;
    if (w.empty() || w.front().letter != want) return std::nullopt;
    rows[w.front().row][w.front().col] = op.kind == 'e' ? 1 : 2;
  } else {
    int i = op.index;
    if (i < 1 || i > n - 1) throw std::out_of_range("operator index");
    TaggedWord surv = red_word(t, i);
    const TaggedLetter* cell = nullptr;
    if (op.kind == 'e') {
      for (const auto& x : surv)
        if (x.letter == i + 1) {
          cell = &x;
          break;
        }
      // marginal largeness guarantees an unpaired i+1
      if (!cell) throw std::logic_error("missing unpaired letter in marginally large tableau");
      rows[cell->row][cell->col] = i;
    } else {
      for (auto it = surv.rbegin(); it != surv.rend(); ++it)
        if (it->letter == i) {
          cell = &*it;
          break;
        }
      if (!cell) return std::nullopt;
      rows[cell->row][cell->col] = i + 1;
    }
  }
  ShiftedTableau out(n, canonicalize_grid(std::move(rows), n));
  assert(is_valid_sdt(out) && is_dml(out));
  return out;
}

ShiftedTableau embed(const ShiftedTableau& t, const std::vector<int>& letter_increments) {
  int n = t.rank();
  if (static_cast<int>(letter_increments.size()) > n)
    throw std::invalid_argument("too many increment letters");
  Grid rows = t.grid();
  int nrows = static_cast<int>(rows.size());
  for (int i = 1; i <= static_cast<int>(letter_increments.size()); ++i) {
    int count = letter_increments[i - 1];
    if (count < 0) throw std::invalid_argument("negative increment");
    if (count == 0) continue;
    if (i > nrows + 1) throw std::invalid_argument("increment skips a row");
    if (i == nrows + 1) {
      rows.insert(rows.begin(), std::vector<int>(count, i));
      ++nrows;
    } else {
      rows[nrows - i].insert(rows[nrows - i].begin(), count, i);
    }
  }
  ShiftedTableau out(n, std::move(rows));
  assert(is_valid_sdt(out));
  return out;
}

ShiftedTableau embed_to(const ShiftedTableau& t, const Shape& target) {
  if (target.rows() < t.num_rows() || target.rows() > t.rank())
    throw std::invalid_argument("invalid target shape");
  std::vector<int> inc(target.rows(), 0);
  for (int b = 1; b <= target.rows(); ++b) {
    int cur = b <= t.num_rows() ? static_cast<int>(t.row(t.num_rows() - b).size()) : 0;
    int want = target.parts[target.rows() - b];
    if (want < cur) throw std::invalid_argument("target shape shrinks a row");
    inc[b - 1] = want - cur;
  }
  return embed(t, inc);
}

Weight limit_weight(const ShiftedTableau& t) {
  ShiftedTableau base = lowest_generator(t.shape(), t.rank());
  return sub(content(t), content(base));
}

LimitStats limit_statistics(const ShiftedTableau& t, int i) {
  if (!is_dml(t)) throw std::invalid_argument("not dual marginally large");
  int n = t.rank();
  if (i < 1 || i > n - 1) throw std::out_of_range("statistics index");
  Weight wt = limit_weight(t);
  // eps on the lowest filling of this shape is the row-length difference.
  const Grid& rows = t.grid();
  long long base_eps =
      static_cast<long long>(rows[n - i - 1].size()) - static_cast<long long>(rows[n - i].size());
  long long eps = eps_finite(t, i) - base_eps;
  return {wt, eps, eps + wt_i(wt, i)};
}

ShiftedTableau project(const ShiftedTableau& t, const Shape& shape) {
  int n = t.rank();
  if (shape.rows() != t.num_rows()) throw std::invalid_argument("shape unreachable by push-ins");
  Grid rows = t.grid();
  for (int r = 0; r < shape.rows(); ++r) {
    int delta = shape.parts[r] - static_cast<int>(rows[r].size());
    if (delta < 0) throw std::invalid_argument("shape unreachable by push-ins");
    rows[r].insert(rows[r].begin(), delta, n - r);
  }
  ShiftedTableau out(n, std::move(rows));
  if (canonicalize(out) != t) throw std::invalid_argument("shape unreachable by push-ins");
  return out;
}

}  // namespace qck
