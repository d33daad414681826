#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qck/element.hpp"

namespace qck {

struct GraphNode {
  CrystalElement elem;
  Weight wt;
  std::vector<ExtInt> eps, phi;  // indexed by i-1 for i in 1..n-1
  int depth = 0;
};

/// f-direction edge: src --label--> dst means f_label(src) = dst.
struct GraphEdge {
  int src;
  int label;
  int dst;
  auto operator<=>(const GraphEdge&) const = default;
};

struct CrystalGraph {
  int n = 0;
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  std::vector<int> generators;
  bool truncated = false;
  int depth_cap = -1;
  bool expect_nonneg_wt = false;

  int find(const CrystalElement& e) const;  // -1 when absent
};

/// Node guard: QCK_MAX_NODES env override, else 100000.
long long default_node_guard();

struct BfsOptions {
  bool use_e = true;
  bool use_f = true;
  std::vector<int> index_set;  // empty = all of 1..n-1 and -1
  int depth = -1;              // -1 = unbounded
  long long max_nodes = 0;     // 0 = default_node_guard()
};

/// Breadth-first closure under the requested operators, with deterministic
/// node ordering by (weight, serialization). Throws when the node guard is
/// exceeded.
CrystalGraph bfs_subcrystal(const std::vector<CrystalElement>& gens, const BfsOptions& opt = {});

struct AxiomReport {
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  long long checks = 0;
  bool passed() const { return violations.empty(); }
};

/// Verifies the abstract crystal axioms on the graph; with q_level also the
/// odd-operator clauses. On truncated graphs, operator-application checks
/// are restricted to interior nodes (depth < cap).
AxiomReport check_axioms(const CrystalGraph& g, bool q_level);

enum class WeightMode { exact, mod_ones };

struct IsoResult {
  bool isomorphic = false;
  std::vector<int> witness;  // witness[g_node] = h_node
  std::string reason;
};

/// Label-respecting digraph isomorphism; weights compared exactly or up to a
/// global multiple of (1,...,1).
IsoResult labeled_isomorphic(const CrystalGraph& g, const CrystalGraph& h, WeightMode mode);

std::string to_dot(const CrystalGraph& g);

}  // namespace qck
