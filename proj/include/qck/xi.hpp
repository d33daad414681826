#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qck/graph.hpp"
#include "qck/limit.hpp"

namespace qck {

/// Positive root epsilon_i - epsilon_j, 1 <= i < j <= n.
struct Root {
  int i;
  int j;
  auto operator<=>(const Root&) const = default;
};

using RootSubset = std::vector<Root>;

std::string to_string(const Root& r);
Weight root_weight(const Root& r, int n);

/// Decreasing subword k, k-1, ..., i of the nontrivial reading word whose
/// letters pair consecutively and whose lowest letter is unpaired. cells are
/// 0-based (row, col), top letter first.
struct Consecution {
  int i;
  int k;
  std::vector<std::pair<int, int>> cells;
};

/// Reading word restricted to cells that are not leading letters of their
/// row's own letter (row j from the bottom leads with j's).
TaggedWord nontrivial_reading_word(const ShiftedTableau& t);

/// All consecutions, ordered by k descending then leftmost top cell.
std::vector<Consecution> find_consecutions(const ShiftedTableau& t);

struct XiTraceStep {
  Root root;
  int j;
  int k;
  ShiftedTableau state;
};

/// Weight-preserving map from subsets of the positive roots to lowest-weight
/// elements of the limit crystal. The trace records the tableau after each
/// root is incorporated.
ShiftedTableau xi_forward(const RootSubset& roots, int n, std::vector<XiTraceStep>* trace = nullptr);

/// Inverse of xi_forward; requires a lowest-weight dual marginally large
/// input. The trace records the state after each peeled root.
RootSubset xi_inverse(const ShiftedTableau& t, std::vector<XiTraceStep>* trace = nullptr);

/// True iff every lowering operator, including the odd one, returns zero.
bool is_lowest_weight_limit(const ShiftedTableau& t);

/// Closure ball of the limit crystal: a two-sided BFS of depth
/// height_cap + n seeded at every lowest-weight element found so far,
/// iterated to a fixpoint of the discovered-sink set. Contains every
/// element of weight height <= height_cap (each one descends to a sink of
/// no greater height in at most height_cap lowering steps).
CrystalGraph limit_ball(int n, int height_cap, long long max_nodes = 0);

/// All lowest-weight elements with weight height <= height_cap, grouped by
/// weight; found by filtering the closure ball, independently of the
/// bijection.
std::map<Weight, std::vector<ShiftedTableau>> enumerate_lowest(int n, int height_cap,
                                                               long long max_nodes = 0);

}  // namespace qck
