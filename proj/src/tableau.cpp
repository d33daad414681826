#include "qck/tableau.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qck {

Shape Shape::of(std::vector<int> parts) {
  for (size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] < 1) throw std::invalid_argument("shape parts must be positive");
    if (k > 0 && parts[k - 1] <= parts[k])
      throw std::invalid_argument("shape parts must be strictly decreasing");
  }
  return Shape{std::move(parts)};
}

int Shape::cells() const {
  int total = 0;
  for (int p : parts) total += p;
  return total;
}

std::string to_string(const Shape& s) {
  std::string out;
  for (size_t k = 0; k < s.parts.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(s.parts[k]);
  }
  return out.empty() ? "()" : out;
}

ShiftedTableau::ShiftedTableau(int n, Grid rows) : n_(n), rows_(std::move(rows)) {
  if (n_ < 1) throw std::invalid_argument("rank must be at least 1");
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) throw std::invalid_argument("empty row");
    if (r > 0 && rows_[r - 1].size() <= rows_[r].size())
      throw std::invalid_argument("row lengths must be strictly decreasing");
    for (int x : rows_[r])
      if (x < 1 || x > n_) throw std::invalid_argument("letter out of range");
  }
}

Shape ShiftedTableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return Shape{std::move(parts)};
}

int ShiftedTableau::cells() const {
  int total = 0;
  for (const auto& r : rows_) total += static_cast<int>(r.size());
  return total;
}

std::string ShiftedTableau::repr() const {
  std::string s = std::to_string(n_) + "|";
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += "/";
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) s += ",";
      s += std::to_string(rows_[r][c]);
    }
  }
  return s;
}

bool is_hook_word(std::span<const int> w) {
  if (w.empty()) throw std::invalid_argument("empty word");
  size_t p = 0;
  while (p + 1 < w.size() && w[p] >= w[p + 1]) ++p;
  // w[0..p] is the maximal weakly decreasing prefix; the rest must strictly increase.
  for (size_t k = p; k + 1 < w.size(); ++k)
    if (w[k] >= w[k + 1]) return false;
  return true;
}

TaggedWord reading_word(const Grid& rows) {
  TaggedWord w;
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = static_cast<int>(rows[r].size()) - 1; c >= 0; --c)
      w.push_back({rows[r][c], static_cast<int>(r), c});
  return w;
}

TaggedWord reading_word(const ShiftedTableau& t) { return reading_word(t.grid()); }

TaggedWord restricted_word_grid(const Grid& rows, int n, int i) {
  if (i < 1 || i > n - 1) throw std::out_of_range("restricted_word index");
  TaggedWord w;
  for (const auto& x : reading_word(rows))
    if (x.letter == i || x.letter == i + 1) w.push_back(x);
  return w;
}

TaggedWord restricted_word(const ShiftedTableau& t, int i) {
  return restricted_word_grid(t.grid(), t.rank(), i);
}

Reduction pair_reduce_full(const TaggedWord& w, int i) {
  Reduction red;
  for (const auto& x : w) {
    if (x.letter != i && x.letter != i + 1)
      throw std::invalid_argument("foreign letter present");
    if (x.letter == i && !red.survivors.empty() && red.survivors.back().letter == i + 1) {
      red.pairs.emplace_back(red.survivors.back(), x);
      red.survivors.pop_back();
    } else {
      red.survivors.push_back(x);
    }
  }
  return red;
}

TaggedWord pair_reduce(const TaggedWord& w, int i) { return pair_reduce_full(w, i).survivors; }

Reduction red_word_full(const Grid& rows, int n, int i) {
  return pair_reduce_full(restricted_word_grid(rows, n, i), i);
}

TaggedWord red_word(const ShiftedTableau& t, int i) {
  return red_word_full(t.grid(), t.rank(), i).survivors;
}

namespace {

// Entry at absolute column c of row r (0-based; row r is indented r cells),
// or 0 when the cell does not exist.
int at_abs(const Grid& rows, int r, int c) {
  if (r < 0 || r >= static_cast<int>(rows.size())) return 0;
  int rel = c - r;
  if (rel < 0 || rel >= static_cast<int>(rows[r].size())) return 0;
  return rows[r][rel];
}

}  // namespace

ValidationReport validate_sdt(const ShiftedTableau& t) {
  ValidationReport rep;
  const Grid& rows = t.grid();
  auto flag = [&rep](std::string kind, std::vector<std::pair<int, int>> cells, std::string detail) {
    rep.valid = false;
    rep.violations.push_back({std::move(kind), std::move(cells), std::move(detail)});
  };

  for (size_t r = 0; r < rows.size(); ++r)
    if (!is_hook_word(rows[r]))
      flag("row_not_hook", {{static_cast<int>(r) + 1, 1}},
           "row " + std::to_string(r + 1) + " is not a hook word");

  for (size_t r = 0; r + 1 < rows.size(); ++r) {
    int leftmost = rows[r][0];
    for (size_t c = 0; c < rows[r + 1].size(); ++c)
      if (rows[r + 1][c] >= leftmost)
        flag("leftmost_entry", {{static_cast<int>(r) + 1, 1}, {static_cast<int>(r) + 2, static_cast<int>(c) + 1}},
             "leftmost entry of row " + std::to_string(r + 1) + " not above row below");
  }

  // Forbidden configurations, in absolute columns: L has a over c with b to
  // the right of c one row down (a <= b <= c); U has a under c with b to the
  // left of c in the upper row (a < b < c).
  int nrows = static_cast<int>(rows.size());
  for (int r = 0; r + 1 < nrows; ++r) {
    int lo = r, hi = r + static_cast<int>(rows[r].size());  // absolute column range of row r
    for (int x = lo; x < hi; ++x) {
      int a = at_abs(rows, r, x);
      int c = at_abs(rows, r + 1, x);
      if (c == 0) continue;
      for (int y = x + 1; y < r + 1 + static_cast<int>(rows[r + 1].size()); ++y) {
        int b = at_abs(rows, r + 1, y);
        if (b == 0) continue;
        if (a <= b && b <= c)
          flag("type_L", {{r + 1, x - r + 1}, {r + 2, x - r}, {r + 2, y - r}},
               "type L at rows " + std::to_string(r + 1) + "," + std::to_string(r + 2));
      }
    }
    for (int y = lo + 1; y < hi; ++y) {
      int c = at_abs(rows, r, y);
      int a = at_abs(rows, r + 1, y);
      if (a == 0) continue;
      for (int x = lo; x < y; ++x) {
        int b = at_abs(rows, r, x);
        if (a < b && b < c)
          flag("type_U", {{r + 1, x - r + 1}, {r + 1, y - r + 1}, {r + 2, y - r}},
               "type U at rows " + std::to_string(r + 1) + "," + std::to_string(r + 2));
      }
    }
  }
  return rep;
}

bool is_valid_sdt(const ShiftedTableau& t) { return validate_sdt(t).valid; }

Weight content_grid(const Grid& rows, int n) {
  Weight w(n, 0);
  for (const auto& row : rows)
    for (int x : row) ++w[x - 1];
  return w;
}

Weight content(const ShiftedTableau& t) { return content_grid(t.grid(), t.rank()); }

namespace {

// Partial-row admissibility: weakly decreasing then strictly increasing.
bool hook_prefix_ok(const std::vector<int>& row) {
  size_t p = 0;
  while (p + 1 < row.size() && row[p] >= row[p + 1]) ++p;
  for (size_t k = p; k + 1 < row.size(); ++k)
    if (row[k] >= row[k + 1]) return false;
  return true;
}

// Type L / U scan restricted to the two bottom rows of a partial grid, used
// while extending row r+1 cell by cell.
bool pair_rows_ok(const Grid& rows, int r) {
  int hi = r + static_cast<int>(rows[r].size());
  for (int x = r; x < hi; ++x) {
    int a = at_abs(rows, r, x);
    int c = at_abs(rows, r + 1, x);
    if (c == 0) continue;
    for (int y = x + 1; y < r + 1 + static_cast<int>(rows[r + 1].size()); ++y) {
      int b = at_abs(rows, r + 1, y);
      if (b != 0 && a <= b && b <= c) return false;
    }
  }
  for (int y = r + 1; y < hi; ++y) {
    int c = at_abs(rows, r, y);
    int a = at_abs(rows, r + 1, y);
    if (a == 0) continue;
    for (int x = r; x < y; ++x) {
      int b = at_abs(rows, r, x);
      if (a < b && b < c) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<ShiftedTableau> enumerate_sdt(const Shape& shape, int n, long long cap) {
  std::vector<ShiftedTableau> out;
  if (shape.rows() > n) throw std::invalid_argument("shape has more rows than the rank");
  if (shape.rows() == 0) {
    out.emplace_back(n, Grid{});
    return out;
  }
  Grid rows(shape.rows());
  long long visited = 0;

  std::function<void(int)> fill = [&](int idx) {
    if (++visited > cap) throw std::runtime_error("enumeration cap exceeded");
    if (idx == shape.cells()) {
      out.emplace_back(n, rows);
      return;
    }
    int total = 0, r = 0;
    while (idx >= total + shape.parts[r]) total += shape.parts[r++];
    for (int v = 1; v <= n; ++v) {
      rows[r].push_back(v);
      bool ok = hook_prefix_ok(rows[r]);
      if (ok && r > 0) ok = v < rows[r - 1][0];
      if (ok && r > 0) ok = pair_rows_ok(rows, r - 1);
      if (ok) fill(idx + 1);
      rows[r].pop_back();
    }
  };
  fill(0);
  return out;
}

}  // namespace qck
