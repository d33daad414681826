#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qck/weight.hpp"

namespace qck {

/// Raw row data, top row first. Used for transient states that may not form
/// a strict shifted shape; ShiftedTableau is the validated form.
using Grid = std::vector<std::vector<int>>;

/// Strict partition shape, parts listed top row first.
struct Shape {
  std::vector<int> parts;

  static Shape of(std::vector<int> parts);
  int rows() const { return static_cast<int>(parts.size()); }
  int cells() const;
  bool operator==(const Shape&) const = default;
};

std::string to_string(const Shape& s);

/// Filling of a shifted strict-partition shape with letters 1..n, rows top
/// to bottom. Construction enforces well-formedness (letters in range, row
/// lengths strictly decreasing); SDT validity is checked by validate_sdt.
class ShiftedTableau {
 public:
  ShiftedTableau(int n, Grid rows);

  int rank() const { return n_; }
  const Grid& grid() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<int>& row(int r) const { return rows_[r]; }
  int at(int r, int c) const { return rows_[r][c]; }
  Shape shape() const;
  int cells() const;
  bool empty() const { return rows_.empty(); }

  /// Canonical string form "n|r1/r2/..." with comma-separated letters.
  std::string repr() const;

  bool operator==(const ShiftedTableau& o) const { return n_ == o.n_ && rows_ == o.rows_; }
  bool operator!=(const ShiftedTableau& o) const { return !(*this == o); }

 private:
  int n_;
  Grid rows_;
};

struct TaggedLetter {
  int letter;
  int row;  // 0-based, top row 0
  int col;  // 0-based within the row
  bool operator==(const TaggedLetter&) const = default;
};

/// Letters carrying their source cells, in reading order.
using TaggedWord = std::vector<TaggedLetter>;

/// True iff w splits as a weakly decreasing prefix followed by a strictly
/// increasing suffix. Throws on the empty word.
bool is_hook_word(std::span<const int> w);

/// Rows top to bottom, each read right to left.
TaggedWord reading_word(const Grid& rows);
TaggedWord reading_word(const ShiftedTableau& t);

/// Subword of the reading word with letters in {i, i+1}.
TaggedWord restricted_word(const ShiftedTableau& t, int i);
TaggedWord restricted_word_grid(const Grid& rows, int n, int i);

/// Result of cancelling adjacent (i+1, i) pairs until none remain. The
/// survivors list all i's before all (i+1)'s; pairs records each cancelled
/// (i+1, i) cell pair.
struct Reduction {
  TaggedWord survivors;
  std::vector<std::pair<TaggedLetter, TaggedLetter>> pairs;
};

/// Cancels adjacent (i+1, i) pairs in w; w may contain only letters i, i+1.
/// The normal form is independent of cancellation order.
TaggedWord pair_reduce(const TaggedWord& w, int i);
Reduction pair_reduce_full(const TaggedWord& w, int i);

/// red_i(T): the {i, i+1}-subword of the reading word after cancellation.
TaggedWord red_word(const ShiftedTableau& t, int i);
Reduction red_word_full(const Grid& rows, int n, int i);

struct Violation {
  std::string kind;                          // "row_not_hook" | "leftmost_entry" | "type_L" | "type_U"
  std::vector<std::pair<int, int>> cells;    // 1-based (row, col) coordinates
  std::string detail;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

/// Checks the three semistandard-decomposition conditions: hook rows, the
/// leftmost-entry condition, and absence of type L / type U configurations.
ValidationReport validate_sdt(const ShiftedTableau& t);
bool is_valid_sdt(const ShiftedTableau& t);

/// Letter multiplicities as a weight vector: coords[i-1] = #cells with i.
Weight content(const ShiftedTableau& t);
Weight content_grid(const Grid& rows, int n);

/// All valid SDT fillings of the shape, by backtracking with per-cell
/// pruning. Throws when the search exceeds the cap.
std::vector<ShiftedTableau> enumerate_sdt(const Shape& shape, int n,
                                          long long cap = 10'000'000);

}  // namespace qck
