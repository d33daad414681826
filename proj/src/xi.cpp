#include "qck/xi.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qck {

std::string to_string(const Root& r) { return std::to_string(r.i) + "-" + std::to_string(r.j); }

Weight root_weight(const Root& r, int n) {
  Weight w(n, 0);
  w[r.i - 1] = 1;
  w[r.j - 1] = -1;
  return w;
}

namespace {

using Cell = std::pair<int, int>;

int leading_run(const std::vector<int>& row, int letter) {
  int c = 0;
  while (c < static_cast<int>(row.size()) && row[c] == letter) ++c;
  return c;
}

// Top row r leads with the letter n-r; those cells are the trivial ones.
bool is_trivial_cell(const Grid& rows, int n, int r, int c) {
  return rows[r][c] == n - r && c < leading_run(rows[r], n - r);
}

// Reading-order rank of a cell, for leftmost comparisons.
long long rd_rank(const Grid& rows, int r, int c) {
  long long rank = 0;
  for (int k = 0; k < r; ++k) rank += static_cast<long long>(rows[k].size());
  return rank + (static_cast<long long>(rows[r].size()) - 1 - c);
}

// Cancellation data of red_i for every index, recomputed per state.
struct RedTables {
  std::vector<Reduction> red;  // index i-1

  RedTables(const Grid& rows, int n) {
    red.reserve(n - 1);
    for (int i = 1; i < n; ++i) red.push_back(red_word_full(rows, n, i));
  }

  bool survives(int i, const Cell& c) const {
    for (const auto& x : red[i - 1].survivors)
      if (x.row == c.first && x.col == c.second) return true;
    return false;
  }

  // Partner of the cell holding the larger letter i+1 in red_i, if cancelled.
  std::optional<Cell> partner_below(int i, const Cell& c) const {
    for (const auto& [hi, lo] : red[i - 1].pairs)
      if (hi.row == c.first && hi.col == c.second) return Cell{lo.row, lo.col};
    return std::nullopt;
  }
};

// The unique consecution headed at a nontrivial top cell, when the partner
// chain closes off with an unpaired letter (or reaches 1) through nontrivial
// cells only.
std::optional<Consecution> chain_from(const Grid& rows, int n, const RedTables& tabs, int r, int c) {
  int k = rows[r][c];
  Consecution out{k, k, {{r, c}}};
  Cell cur{r, c};
  int a = k;
  while (true) {
    if (a == 1) {
      out.i = 1;
      return out;
    }
    if (tabs.survives(a - 1, cur)) {
      out.i = a;
      return out;
    }
    auto p = tabs.partner_below(a - 1, cur);
    if (!p) return std::nullopt;
    if (is_trivial_cell(rows, n, p->first, p->second)) return std::nullopt;
    out.cells.push_back(*p);
    cur = *p;
    --a;
  }
}

std::vector<Consecution> consecutions_grid(const Grid& rows, int n) {
  RedTables tabs(rows, n);
  std::vector<Consecution> out;
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    for (int c = 0; c < static_cast<int>(rows[r].size()); ++c) {
      if (is_trivial_cell(rows, n, r, c)) continue;
      if (auto cons = chain_from(rows, n, tabs, r, c)) out.push_back(std::move(*cons));
    }
  std::sort(out.begin(), out.end(), [&](const Consecution& a, const Consecution& b) {
    if (a.k != b.k) return a.k > b.k;
    return rd_rank(rows, a.cells[0].first, a.cells[0].second) <
           rd_rank(rows, b.cells[0].first, b.cells[0].second);
  });
  return out;
}

void push_in_rows(Grid& rows, int n, int h, std::set<Cell>* touched) {
  for (int k = 0; k < h; ++k) rows[k].insert(rows[k].begin(), n - k);
  if (touched) {
    std::set<Cell> moved;
    for (const auto& [r, c] : *touched) moved.insert({r, r < h ? c + 1 : c});
    *touched = std::move(moved);
  }
}

}  // namespace

TaggedWord nontrivial_reading_word(const ShiftedTableau& t) {
  TaggedWord out;
  const Grid& rows = t.grid();
  for (const auto& x : reading_word(rows))
    if (!is_trivial_cell(rows, t.rank(), x.row, x.col)) out.push_back(x);
  return out;
}

std::vector<Consecution> find_consecutions(const ShiftedTableau& t) {
  return consecutions_grid(t.grid(), t.rank());
}

ShiftedTableau xi_forward(const RootSubset& roots, int n, std::vector<XiTraceStep>* trace) {
  for (const Root& r : roots)
    if (r.i < 1 || r.i >= r.j || r.j > n) throw std::invalid_argument("root outside Phi+");
  std::vector<RootSubset> by_j(n + 1);
  for (const Root& r : roots) by_j[r.j].push_back(r);
  for (auto& xs : by_j) {
    std::sort(xs.begin(), xs.end(), [](const Root& a, const Root& b) { return a.i > b.i; });
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  }

  Grid rows = limit_generator(n).grid();
  Weight prev = Weight(n, 0);
  for (int j = 2; j <= n; ++j) {
    push_in_rows(rows, n, n + 1 - j, nullptr);
    int k = 0;
    for (const Root& beta : by_j[j]) {
      ++k;
      int i = beta.i;
      std::set<Cell> touched;
      // Consecutions are hunted in the state the root started from; later
      // push-ins only shift their cells to the right.
      Grid pre = rows;
      std::vector<Consecution> pre_cons = consecutions_grid(pre, n);
      std::vector<int> row_shift(n, 0);
      auto push_shifted = [&](int h) {
        push_in_rows(rows, n, h, &touched);
        for (int rr = 0; rr < h; ++rr) ++row_shift[rr];
      };

      push_shifted(n + 2 - j);
      int r = n - j;  // top index of row j from the bottom
      int len = static_cast<int>(rows[r].size());
      int pos = len - k + 1;  // 1-based; lands just before the tail built so far
      rows[r].insert(rows[r].begin() + (pos - 1), j - k);
      touched.insert({r, pos - 1});

      int b = j - k;
      while (b != i) {
        if (b < i) throw std::logic_error("xi_forward: hunt passed its target letter");
        RedTables tabs(rows, n);
        int a = 0;
        // Unpaired b anywhere in the live state: demote it (or its
        // same-letter right neighbor).
        const TaggedLetter* found = nullptr;
        for (const auto& x : tabs.red[b - 1].survivors)
          if (x.letter == b) {
            found = &x;
            break;
          }
        if (found) {
          Cell target{found->row, found->col};
          Cell right{target.first, target.second + 1};
          if (right.second < static_cast<int>(rows[right.first].size()) &&
              rows[right.first][right.second] == b && !touched.count(right))
            target = right;
          rows[target.first][target.second] = b - 1;
          touched.insert(target);
          a = b;
        } else {
          // A consecution of the pre-root state ending above i, mapped to the
          // live grid through the push-in shifts.
          std::optional<std::vector<Cell>> best;
          int best_a = 0;
          for (const auto& cons : pre_cons) {
            if (cons.k != b || cons.i <= i) continue;
            std::vector<Cell> mapped;
            bool clean = true;
            for (size_t t = 0; t < cons.cells.size() && clean; ++t) {
              Cell cell{cons.cells[t].first, cons.cells[t].second + row_shift[cons.cells[t].first]};
              int expect = cons.k - static_cast<int>(t);
              if (cell.second >= static_cast<int>(rows[cell.first].size()) ||
                  rows[cell.first][cell.second] != expect || touched.count(cell))
                clean = false;
              else
                mapped.push_back(cell);
            }
            if (clean) {
              best = std::move(mapped);
              best_a = cons.i;
              break;  // list is ordered leftmost-first within equal k
            }
          }
          if (best) {
            for (const auto& [cr, cc] : *best) {
              rows[cr][cc] -= 1;
              touched.insert({cr, cc});
            }
            a = best_a;
          } else {
            a = b;
            push_shifted(n + 1 - a);
            int rr = n - a;
            int run = leading_run(rows[rr], a);
            rows[rr][run - 1] = a - 1;
            touched.insert({rr, run - 1});
          }
        }
        b = a - 1;
      }

      rows = canonicalize_grid(std::move(rows), n);
      ShiftedTableau state(n, rows);
      Weight wt = limit_weight(state);
      if (sub(wt, prev) != root_weight(beta, n))
        throw std::logic_error("xi_forward: weight step mismatch at root " + to_string(beta));
      prev = wt;
      if (trace) trace->push_back({beta, j, k, state});
    }
  }
  rows = canonicalize_grid(std::move(rows), n);
  return ShiftedTableau(n, std::move(rows));
}

bool is_lowest_weight_limit(const ShiftedTableau& t) {
  for (const auto& op : all_ops(t.rank(), 'f'))
    if (apply_limit(t, op)) return false;
  return true;
}

namespace {

struct PeelStep {
  Root root;
  Grid after;
};

// One peel of the root epsilon_{i_prime} - epsilon_j along the given chain:
// raise the kept part, drop the top letter, re-canonicalize. Returns nothing
// when the result is not a lowest-weight element.
std::optional<Grid> peel_once(const Grid& rows_in, int n, const Consecution& chain, int j,
                              int i_prime) {
  Grid rows = rows_in;
  // Equal adjacent letters are interchangeable for the pairing; prefer the
  // left copy when raising, as the adding step placed its letters left of
  // the pre-existing tail.
  auto raise = [&rows](Cell cell) {
    if (cell.second > 0 && rows[cell.first][cell.second - 1] == rows[cell.first][cell.second])
      cell.second -= 1;
    rows[cell.first][cell.second] += 1;
  };
  for (int t = 1; t <= j - i_prime; ++t) raise(chain.cells[t]);
  const Cell& top = chain.cells[0];
  rows[top.first][top.second] += 1;
  rows[top.first].erase(rows[top.first].begin() + top.second);
  try {
    rows = canonicalize_grid(std::move(rows), n);
    ShiftedTableau t(n, rows);
    if (!is_valid_sdt(t) || !is_dml(t) || !is_lowest_weight_limit(t)) return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return rows;
}

// Candidate cut letters for the deepest-row chain, ordered with the reading-
// span heuristic first: raise the cut above consecutions living strictly
// inside the kept span (they belong to earlier roots), then try the
// remaining cuts ascending.
std::vector<int> cut_candidates(const Grid& rows, const std::vector<Consecution>& cons,
                                const Consecution& chain, int j) {
  long long top_pos = rd_rank(rows, chain.cells[0].first, chain.cells[0].second);
  int preferred = chain.i;
  for (; preferred < j; ++preferred) {
    const Cell& low_cell = chain.cells[j - preferred];
    long long low_pos = rd_rank(rows, low_cell.first, low_cell.second);
    bool contained = false;
    for (const auto& c : cons) {
      if (!(preferred < c.i && c.k < j)) continue;
      bool inside = true;
      for (const auto& cell : c.cells) {
        long long p = rd_rank(rows, cell.first, cell.second);
        if (p < top_pos || p > low_pos) {
          inside = false;
          break;
        }
      }
      if (inside) {
        contained = true;
        break;
      }
    }
    if (!contained) break;
  }
  std::vector<int> out;
  if (preferred < j) out.push_back(preferred);
  for (int c = chain.i; c < j; ++c)
    if (c != preferred) out.push_back(c);
  return out;
}

// Depth-first peeling in heuristic cut order. The bijection leaves exactly
// one complete unwinding whose re-application reproduces the input, so each
// finished sequence is verified by one forward run and ambiguous cuts
// backtrack.
bool unwind(const Grid& rows, int n, const ShiftedTableau& target, long long& budget,
            std::vector<PeelStep>& steps) {
  if (--budget < 0) throw std::runtime_error("xi_inverse: search budget exceeded");
  int j = 0;
  for (int r = 0; r < n; ++r)
    if (leading_run(rows[r], n - r) < static_cast<int>(rows[r].size())) j = std::max(j, n - r);
  if (j == 0) {
    RootSubset set;
    for (const auto& s : steps) set.push_back(s.root);
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.size() != steps.size()) return false;  // a root peeled twice
    return xi_forward(set, n) == target;
  }

  auto cons = consecutions_grid(rows, n);
  const Consecution* chain = nullptr;
  for (const auto& c : cons)
    if (c.k == j && (!chain || c.i < chain->i)) chain = &c;
  if (!chain) return false;

  for (int cut : cut_candidates(rows, cons, *chain, j)) {
    auto next = peel_once(rows, n, *chain, j, cut);
    if (!next) continue;
    steps.push_back({Root{cut, j}, *next});
    if (unwind(*next, n, target, budget, steps)) return true;
    steps.pop_back();
  }
  return false;
}

}  // namespace

RootSubset xi_inverse(const ShiftedTableau& t, std::vector<XiTraceStep>* trace) {
  if (!is_dml(t)) throw std::invalid_argument("not dual marginally large");
  if (!is_lowest_weight_limit(t)) throw std::invalid_argument("not lowest weight");
  int n = t.rank();

  std::vector<PeelStep> steps;
  long long budget = 500000;
  if (!unwind(t.grid(), n, t, budget, steps))
    throw std::logic_error("xi_inverse: no unwinding re-forwards to the input");

  RootSubset out;
  for (const auto& s : steps) out.push_back(s.root);
  std::sort(out.begin(), out.end());
  if (trace)
    for (const auto& s : steps) trace->push_back({s.root, s.root.j, 0, ShiftedTableau(n, s.after)});
  return out;
}

CrystalGraph limit_ball(int n, int height_cap, long long max_nodes) {
  BfsOptions opt;
  opt.depth = height_cap + n;
  opt.max_nodes = max_nodes;
  std::vector<CrystalElement> gens{CrystalElement::limit(limit_generator(n))};
  std::set<std::string> seen{gens[0].repr()};
  while (true) {
    CrystalGraph ball = bfs_subcrystal(gens, opt);
    bool grew = false;
    for (const auto& node : ball.nodes) {
      const ShiftedTableau& tab = node.elem.tableau();
      auto exps = alpha_exponents(node.wt);
      if (!exps || alpha_height(*exps) > height_cap) continue;
      if (!is_lowest_weight_limit(tab)) continue;
      if (seen.insert(node.elem.repr()).second) {
        gens.push_back(node.elem);
        grew = true;
      }
    }
    if (!grew) return ball;
  }
}

std::map<Weight, std::vector<ShiftedTableau>> enumerate_lowest(int n, int height_cap,
                                                               long long max_nodes) {
  CrystalGraph ball = limit_ball(n, height_cap, max_nodes);
  std::map<Weight, std::vector<ShiftedTableau>> out;
  for (const auto& node : ball.nodes) {
    const ShiftedTableau& tab = node.elem.tableau();
    if (!is_lowest_weight_limit(tab)) continue;
    auto exps = alpha_exponents(node.wt);
    if (!exps || alpha_height(*exps) > height_cap) continue;
    out[node.wt].push_back(tab);
  }
  return out;
}

}  // namespace qck
