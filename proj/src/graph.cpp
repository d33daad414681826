#include "qck/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qck {

int CrystalGraph::find(const CrystalElement& e) const {
  std::string key = e.repr();
  for (size_t k = 0; k < nodes.size(); ++k)
    if (nodes[k].elem.repr() == key) return static_cast<int>(k);
  return -1;
}

long long default_node_guard() {
  if (const char* env = std::getenv("QCK_MAX_NODES")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 100000;
}

namespace {

GraphNode make_node(const CrystalElement& e, int depth) {
  GraphNode node{e, weight(e), {}, {}, depth};
  for (int i = 1; i < e.rank(); ++i) {
    node.eps.push_back(eps(e, i));
    node.phi.push_back(phi(e, i));
  }
  return node;
}

}  // namespace

CrystalGraph bfs_subcrystal(const std::vector<CrystalElement>& gens, const BfsOptions& opt) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  int n = gens[0].rank();
  long long guard = opt.max_nodes > 0 ? opt.max_nodes : default_node_guard();
  std::vector<int> indices = opt.index_set;
  if (indices.empty()) {
    for (int i = 1; i < n; ++i) indices.push_back(i);
    indices.push_back(-1);
  }

  CrystalGraph g;
  g.n = n;
  g.depth_cap = opt.depth;
  std::unordered_map<std::string, int> ids;
  std::deque<int> queue;
  std::set<GraphEdge> edges;

  auto intern = [&](const CrystalElement& e, int depth) {
    auto [it, inserted] = ids.try_emplace(e.repr(), static_cast<int>(g.nodes.size()));
    if (inserted) {
      if (static_cast<long long>(g.nodes.size()) >= guard)
        throw std::runtime_error("node guard exceeded (max-nodes=" + std::to_string(guard) + ")");
      g.nodes.push_back(make_node(e, depth));
      queue.push_back(it->second);
    }
    return it->second;
  };

  for (const auto& e : gens) {
    if (e.rank() != n) throw std::invalid_argument("generator rank mismatch");
    g.generators.push_back(intern(e, 0));
  }

  bool expect_nonneg = true;
  for (const auto& e : gens)
    if (e.kind() != CrystalElement::Kind::finite) expect_nonneg = false;
  g.expect_nonneg_wt = expect_nonneg;

  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    int depth = g.nodes[cur].depth;
    if (opt.depth >= 0 && depth >= opt.depth) {
      g.truncated = true;
      continue;
    }
    CrystalElement elem = g.nodes[cur].elem;
    for (int i : indices) {
      if (opt.use_f) {
        if (auto img = apply(elem, {'f', i})) {
          int dst = intern(*img, depth + 1);
          edges.insert({cur, i, dst});
        }
      }
      if (opt.use_e) {
        if (auto img = apply(elem, {'e', i})) {
          int src = intern(*img, depth + 1);
          edges.insert({src, i, cur});
        }
      }
    }
  }

  // Deterministic ordering by (weight, serialization).
  std::vector<int> order(g.nodes.size());
  for (size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.nodes[a].wt != g.nodes[b].wt) return g.nodes[a].wt < g.nodes[b].wt;
    return g.nodes[a].elem.repr() < g.nodes[b].elem.repr();
  });
  std::vector<int> newid(g.nodes.size());
  for (size_t k = 0; k < order.size(); ++k) newid[order[k]] = static_cast<int>(k);

  CrystalGraph out;
  out.n = n;
  out.truncated = g.truncated;
  out.depth_cap = g.depth_cap;
  out.expect_nonneg_wt = g.expect_nonneg_wt;
  out.nodes.reserve(g.nodes.size());
  for (int old : order) out.nodes.push_back(std::move(g.nodes[old]));
  for (const auto& e : edges) out.edges.push_back({newid[e.src], e.label, newid[e.dst]});
  std::sort(out.edges.begin(), out.edges.end());
  for (int gen : g.generators) out.generators.push_back(newid[gen]);
  std::sort(out.generators.begin(), out.generators.end());
  return out;
}

namespace {

struct EdgeIndex {
  // out[node][label] = dst, in[node][label] = src
  std::vector<std::map<int, int>> out, in;
  std::vector<std::string> structural;

  explicit EdgeIndex(const CrystalGraph& g) : out(g.nodes.size()), in(g.nodes.size()) {
    for (const auto& e : g.edges) {
      if (!out[e.src].emplace(e.label, e.dst).second)
        structural.push_back("duplicate out-edge at node " + std::to_string(e.src) + " label " +
                             std::to_string(e.label));
      if (!in[e.dst].emplace(e.label, e.src).second)
        structural.push_back("duplicate in-edge at node " + std::to_string(e.dst) + " label " +
                             std::to_string(e.label));
    }
  }
};

std::string node_tag(const CrystalGraph& g, int v) {
  return "node " + std::to_string(v) + " [" + g.nodes[v].elem.repr() + "]";
}

}  // namespace

AxiomReport check_axioms(const CrystalGraph& g, bool q_level) {
  AxiomReport rep;
  auto fail = [&rep](const std::string& msg) { rep.violations.push_back(msg); };
  EdgeIndex idx(g);
  for (const auto& s : idx.structural) fail(s);

  int n = g.n;
  auto interior = [&](int v) { return !g.truncated || g.depth_cap < 0 || g.nodes[v].depth < g.depth_cap; };

  // Per-node statistics axioms.
  for (size_t v = 0; v < g.nodes.size(); ++v) {
    const GraphNode& node = g.nodes[v];
    for (int i = 1; i < n; ++i) {
      ++rep.checks;
      const ExtInt& e = node.eps[i - 1];
      const ExtInt& p = node.phi[i - 1];
      if (e.minus_inf != p.minus_inf)
        fail("eps/phi -inf mismatch for i=" + std::to_string(i) + " at " + node_tag(g, v));
      else if (!e.minus_inf && p.v != e.v + wt_i(node.wt, i))
        fail("phi != eps + wt_i for i=" + std::to_string(i) + " at " + node_tag(g, v));
      if (p.minus_inf) {
        // -inf clause: no i-edges at this node.
        if (idx.out[v].count(i) || idx.in[v].count(i))
          fail("edge at -inf statistics, i=" + std::to_string(i) + " at " + node_tag(g, v));
      }
    }
    if (q_level && g.expect_nonneg_wt) {
      ++rep.checks;
      for (int c : node.wt)
        if (c < 0) {
          fail("negative weight coordinate at " + node_tag(g, v));
          break;
        }
    }
  }
  if (q_level && !g.expect_nonneg_wt)
    rep.notes.push_back("nonnegative-weight clause exempted (non-polynomial source crystal)");

  // Edge ladders.
  for (const auto& e : g.edges) {
    ++rep.checks;
    const GraphNode& a = g.nodes[e.src];
    const GraphNode& b = g.nodes[e.dst];
    int ladder_i = e.label == -1 ? 1 : e.label;
    if (sub(a.wt, b.wt) != alpha(n, ladder_i))
      fail("weight ladder broken on edge " + std::to_string(e.src) + " -" + std::to_string(e.label) +
           "-> " + std::to_string(e.dst));
    if (e.label != -1) {
      int i = e.label;
      const ExtInt& ea = a.eps[i - 1];
      const ExtInt& eb = b.eps[i - 1];
      const ExtInt& pa = a.phi[i - 1];
      const ExtInt& pb = b.phi[i - 1];
      if (ea.minus_inf || eb.minus_inf || pa.minus_inf || pb.minus_inf)
        fail("-inf statistics on an edge, i=" + std::to_string(i));
      else if (eb.v != ea.v + 1 || pb.v != pa.v - 1)
        fail("eps/phi ladder broken on edge " + std::to_string(e.src) + " -" + std::to_string(i) +
             "-> " + std::to_string(e.dst));
    }
  }

  // Operator re-application on interior nodes: recorded edges are exactly the
  // operator actions, and e/f pair off.
  for (size_t v = 0; v < g.nodes.size(); ++v) {
    if (!interior(static_cast<int>(v))) continue;
    const CrystalElement& elem = g.nodes[v].elem;
    std::vector<int> labels;
    for (int i = 1; i < n; ++i) labels.push_back(i);
    labels.push_back(-1);
    for (int i : labels) {
      ++rep.checks;
      auto fi = apply(elem, {'f', i});
      auto it = idx.out[v].find(i);
      if (fi) {
        int dst = it == idx.out[v].end() ? -1 : it->second;
        if (dst < 0 || g.nodes[dst].elem != *fi)
          fail("recorded f-edge disagrees with operator at " + node_tag(g, static_cast<int>(v)) +
               " i=" + std::to_string(i));
        else {
          auto back = apply(*fi, {'e', i});
          if (!back || *back != elem)
            fail("e/f pairing broken at " + node_tag(g, static_cast<int>(v)) + " i=" + std::to_string(i));
        }
      } else if (it != idx.out[v].end()) {
        fail("edge recorded where operator is zero at " + node_tag(g, static_cast<int>(v)) +
             " i=" + std::to_string(i));
      }
      auto ei = apply(elem, {'e', i});
      if (ei) {
        auto back = apply(*ei, {'f', i});
        if (!back || *back != elem)
          fail("f/e pairing broken at " + node_tag(g, static_cast<int>(v)) + " i=" + std::to_string(i));
      }
    }
    if (q_level) {
      // Odd operators commute with e_i, f_i and preserve eps_i, phi_i for
      // 3 <= i <= n-1.
      auto same = [](const std::optional<CrystalElement>& a, const std::optional<CrystalElement>& b) {
        if (!a || !b) return !a && !b;
        return *a == *b;
      };
      for (int i = 3; i < n; ++i) {
        for (char ok : {'e', 'f'}) {
          for (char pk : {'e', 'f'}) {
            ++rep.checks;
            OperatorLabel odd{ok, -1}, even{pk, i};
            auto path1 = apply(elem, odd);
            std::optional<CrystalElement> x1 = path1 ? apply(*path1, even) : std::nullopt;
            auto path2 = apply(elem, even);
            std::optional<CrystalElement> x2 = path2 ? apply(*path2, odd) : std::nullopt;
            if (!same(x1, x2))
              fail("odd/even commutation broken at " + node_tag(g, static_cast<int>(v)) +
                   " i=" + std::to_string(i));
          }
        }
        auto up = apply(elem, {'e', -1});
        if (up) {
          ++rep.checks;
          if (eps(*up, i) != eps(elem, i) || phi(*up, i) != phi(elem, i))
            fail("odd operator changed eps/phi at " + node_tag(g, static_cast<int>(v)) +
                 " i=" + std::to_string(i));
        }
      }
    }
  }

  return rep;
}

namespace {

bool ones_multiple(const Weight& w) {
  for (size_t k = 1; k < w.size(); ++k)
    if (w[k] != w[0]) return false;
  return true;
}

// Forced parallel walk from a seeded node pair; extends map/used. Returns
// false when labels, weights, or structure disagree.
bool forced_walk(const CrystalGraph& g, const CrystalGraph& h, const EdgeIndex& gi,
                 const EdgeIndex& hi, int ga, int ha, const Weight& shift, std::vector<int>& map,
                 std::vector<char>& used, std::string* reason) {
  std::deque<std::pair<int, int>> queue;
  auto pair_up = [&](int x, int y) {
    if (map[x] == y) return true;
    if (map[x] != -1 || used[y]) {
      if (reason) *reason = "structure mismatch";
      return false;
    }
    if (sub(g.nodes[x].wt, h.nodes[y].wt) != shift) {
      if (reason) *reason = "weight mismatch";
      return false;
    }
    map[x] = y;
    used[y] = 1;
    queue.emplace_back(x, y);
    return true;
  };
  if (!pair_up(ga, ha)) return false;
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    if (gi.out[x].size() != hi.out[y].size() || gi.in[x].size() != hi.in[y].size()) {
      if (reason) *reason = "degree mismatch";
      return false;
    }
    for (const auto& [label, dst] : gi.out[x]) {
      auto it = hi.out[y].find(label);
      if (it == hi.out[y].end()) {
        if (reason) *reason = "edge label mismatch";
        return false;
      }
      if (!pair_up(dst, it->second)) return false;
    }
    for (const auto& [label, src] : gi.in[x]) {
      auto it = hi.in[y].find(label);
      if (it == hi.in[y].end()) {
        if (reason) *reason = "edge label mismatch";
        return false;
      }
      if (!pair_up(src, it->second)) return false;
    }
  }
  return true;
}

std::vector<int> f_sinks(const CrystalGraph& g, const EdgeIndex& idx) {
  std::vector<int> sinks;
  for (size_t v = 0; v < g.nodes.size(); ++v)
    if (idx.out[v].empty()) sinks.push_back(static_cast<int>(v));
  return sinks;
}

}  // namespace

IsoResult labeled_isomorphic(const CrystalGraph& g, const CrystalGraph& h, WeightMode mode) {
  IsoResult res;
  if (g.nodes.size() != h.nodes.size() || g.edges.size() != h.edges.size()) {
    res.reason = "size mismatch: " + std::to_string(g.nodes.size()) + "/" +
                 std::to_string(g.edges.size()) + " vs " + std::to_string(h.nodes.size()) + "/" +
                 std::to_string(h.edges.size());
    return res;
  }
  if (g.nodes.empty()) {
    res.isomorphic = true;
    return res;
  }
  EdgeIndex gi(g), hi(h);
  std::vector<int> ga = f_sinks(g, gi), ha = f_sinks(h, hi);
  if (ga.size() != ha.size()) {
    res.reason = "sink count mismatch";
    return res;
  }

  auto try_anchor = [&](int a, int b) -> std::optional<std::vector<int>> {
    Weight shift = sub(g.nodes[a].wt, h.nodes[b].wt);
    if (mode == WeightMode::exact ? !is_zero(shift) : !ones_multiple(shift)) return std::nullopt;
    std::vector<int> map(g.nodes.size(), -1);
    std::vector<char> used(h.nodes.size(), 0);
    std::string why;
    if (!forced_walk(g, h, gi, hi, a, b, shift, map, used, &why)) return std::nullopt;
    return map;
  };

  if (ga.size() == 1) {
    // Connected (or single-sink) case: the walk from the anchors is forced.
    auto map = try_anchor(ga[0], ha[0]);
    if (map) {
      for (int v : *map)
        if (v == -1) {
          res.reason = "disconnected from anchor";
          return res;
        }
      res.isomorphic = true;
      res.witness = *map;
      return res;
    }
    res.reason = "anchored walk failed";
    return res;
  }

  // Multiple sinks: backtrack over sink pairings with a node cap.
  if (ga.size() > 12) {
    res.reason = "too many anchors for backtracking";
    return res;
  }
  std::vector<int> map(g.nodes.size(), -1);
  std::vector<char> used(h.nodes.size(), 0);
  std::vector<char> taken(ha.size(), 0);
  std::function<bool(size_t)> match = [&](size_t k) -> bool {
    if (k == ga.size()) {
      for (int v : map)
        if (v == -1) return false;
      return true;
    }
    if (map[ga[k]] != -1) return match(k + 1);
    for (size_t t = 0; t < ha.size(); ++t) {
      if (taken[t]) continue;
      Weight shift = sub(g.nodes[ga[k]].wt, h.nodes[ha[t]].wt);
      if (mode == WeightMode::exact ? !is_zero(shift) : !ones_multiple(shift)) continue;
      auto save_map = map;
      auto save_used = used;
      taken[t] = 1;
      if (forced_walk(g, h, gi, hi, ga[k], ha[t], shift, map, used, nullptr) && match(k + 1)) return true;
      map = save_map;
      used = save_used;
      taken[t] = 0;
    }
    return false;
  };
  if (match(0)) {
    res.isomorphic = true;
    res.witness = map;
  } else {
    res.reason = "no anchor matching found";
  }
  return res;
}

namespace {

std::string dot_label(const CrystalElement& e) {
  switch (e.kind()) {
    case CrystalElement::Kind::finite:
    case CrystalElement::Kind::limit: {
      std::string s;
      const Grid& rows = e.tableau().grid();
      for (size_t r = 0; r < rows.size(); ++r) {
        if (r) s += "\\n";
        for (size_t c = 0; c < rows[r].size(); ++c) {
          if (c) s += " ";
          s += std::to_string(rows[r][c]);
        }
      }
      return s.empty() ? "(empty)" : s;
    }
    case CrystalElement::Kind::tmarker: return "t" + to_string(e.marker_weight());
    case CrystalElement::Kind::rmarker: return "r" + to_string(e.marker_weight());
    case CrystalElement::Kind::tensor:
      return dot_label(e.left()) + " (x) " + dot_label(e.right());
  }
  return "?";
}

}  // namespace

std::string to_dot(const CrystalGraph& g) {
  std::ostringstream out;
  out << "digraph crystal {\n  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (size_t v = 0; v < g.nodes.size(); ++v)
    out << "  n" << v << " [label=\"" << dot_label(g.nodes[v].elem) << "\"];\n";
  for (const auto& e : g.edges) {
    out << "  n" << e.src << " -> n" << e.dst << " [label=\"" << e.label << "\"";
    if (e.label == -1) out << ", style=dashed, color=blue";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace qck
