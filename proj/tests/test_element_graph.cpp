#include <doctest.h>

#include <set>
#include <stdexcept>

#include "qck/graph.hpp"
#include "qck/json_io.hpp"

using namespace qck;

namespace {

ShiftedTableau tab(int n, Grid rows) { return ShiftedTableau(n, std::move(rows)); }

CrystalElement lim_gen_tensor_r(int n, Weight mu) {
  return CrystalElement::tensor(CrystalElement::limit(limit_generator(n)),
                                CrystalElement::r_marker(std::move(mu)));
}

}  // namespace

TEST_CASE("elementary crystal statistics") {
  CrystalElement t0 = CrystalElement::t_marker({0, 0, 0});
  CHECK(weight(t0) == Weight{0, 0, 0});
  for (int i = 1; i <= 2; ++i) {
    CHECK(eps(t0, i) == ExtInt::neg_inf());
    CHECK(phi(t0, i) == ExtInt::neg_inf());
  }
  for (const auto& op : all_ops(3, 'e')) CHECK_FALSE(apply(t0, op));
  for (const auto& op : all_ops(3, 'f')) CHECK_FALSE(apply(t0, op));

  CrystalElement r = CrystalElement::r_marker({-3, -2, 0});
  CHECK(weight(r) == Weight{-3, -2, 0});
  CHECK(eps(r, 1) == ExtInt::of(0));
  CHECK(phi(r, 1) == ExtInt::of(-1));
  CHECK(phi(r, 2) == ExtInt::of(-2));
  CHECK_FALSE(apply(r, {'f', 1}));
}

TEST_CASE("tensor with t-marker acts on the left") {
  for (const auto& t : enumerate_sdt(Shape::of({2, 1}), 3)) {
    CrystalElement b = CrystalElement::tensor(CrystalElement::finite(t),
                                              CrystalElement::t_marker({0, 0, 0}));
    for (const auto& op : all_ops(3, 'e')) {
      auto whole = apply(b, op);
      auto part = apply_finite(t, op);
      if (part) {
        REQUIRE(whole);
        CHECK(whole->left().tableau() == *part);
      } else {
        CHECK_FALSE(whole);
      }
    }
  }
}

TEST_CASE("tensor statistics match string lengths") {
  auto left = enumerate_sdt(Shape::of({2, 1}), 2);
  auto right = enumerate_sdt(Shape::of({1}), 2);
  for (const auto& a : left)
    for (const auto& b : right) {
      CrystalElement x =
          CrystalElement::tensor(CrystalElement::finite(a), CrystalElement::finite(b));
      CHECK(weight(x) == add(content(a), content(b)));
      for (int i = 1; i < 2; ++i) {
        int up = 0, down = 0;
        CrystalElement cur = x;
        while (auto img = apply(cur, {'e', i})) {
          cur = *img;
          ++up;
        }
        cur = x;
        while (auto img = apply(cur, {'f', i})) {
          cur = *img;
          ++down;
        }
        CHECK(eps(x, i) == ExtInt::of(up));
        CHECK(phi(x, i) == ExtInt::of(down));
      }
    }
}

TEST_CASE("bfs_subcrystal basics") {
  CrystalElement gen = CrystalElement::finite(lowest_generator(Shape::of({2, 1}), 2));
  CrystalGraph g = bfs_subcrystal({gen});
  CHECK(g.nodes.size() == enumerate_sdt(Shape::of({2, 1}), 2).size());
  CHECK_FALSE(g.truncated);

  BfsOptions depth0;
  depth0.depth = 0;
  CrystalGraph g0 = bfs_subcrystal({gen}, depth0);
  CHECK(g0.nodes.size() == 1);

  // Figure panel: 6 nodes and 7 labeled edges for mu = -epsilon_1.
  CrystalGraph fig = bfs_subcrystal({lim_gen_tensor_r(3, {-1, 0, 0})});
  CHECK(fig.nodes.size() == 6);
  CHECK(fig.edges.size() == 7);

  BfsOptions tiny;
  tiny.max_nodes = 3;
  CHECK_THROWS_AS(bfs_subcrystal({lim_gen_tensor_r(3, {-1, 0, 0})}, tiny), std::runtime_error);
}

TEST_CASE("check_axioms") {
  CrystalGraph g = bfs_subcrystal({CrystalElement::finite(lowest_generator(Shape::of({3, 1}), 3))});
  AxiomReport rep = check_axioms(g, true);
  CHECK(rep.passed());
  CHECK(rep.violations.empty());

  BfsOptions depth0;
  depth0.depth = 0;
  CrystalGraph single = bfs_subcrystal({CrystalElement::finite(tab(3, {{2}}))}, depth0);
  CHECK(check_axioms(single, true).passed());

  // One f-edge with a broken weight delta but internally consistent node
  // statistics: exactly one violation.
  CrystalGraph bad;
  bad.n = 3;
  bad.truncated = true;
  bad.depth_cap = 0;
  GraphNode x{CrystalElement::finite(tab(3, {{1}})), {2, 0, 0}, {}, {}, 0};
  x.eps = {ExtInt::of(0), ExtInt::of(0)};
  x.phi = {ExtInt::of(2), ExtInt::of(0)};
  GraphNode y{CrystalElement::finite(tab(3, {{2}})), {0, 0, 0}, {}, {}, 0};
  y.eps = {ExtInt::of(1), ExtInt::of(0)};
  y.phi = {ExtInt::of(1), ExtInt::of(0)};
  bad.nodes.push_back(x);
  bad.nodes.push_back(y);
  bad.edges.push_back({0, 1, 1});
  AxiomReport bad_rep = check_axioms(bad, false);
  CHECK(bad_rep.violations.size() == 1);
}

TEST_CASE("labeled_isomorphic") {
  CrystalGraph g = bfs_subcrystal({CrystalElement::finite(lowest_generator(Shape::of({2, 1}), 3))});
  IsoResult self = labeled_isomorphic(g, g, WeightMode::exact);
  CHECK(self.isomorphic);
  for (size_t v = 0; v < g.nodes.size(); ++v) CHECK(self.witness[v] == static_cast<int>(v));

  // Swapping one edge label kills the isomorphism.
  CrystalGraph h = g;
  REQUIRE(h.edges.size() >= 2);
  h.edges[0].label = h.edges[0].label == 1 ? 2 : 1;
  CHECK_FALSE(labeled_isomorphic(g, h, WeightMode::exact).isomorphic);

  // Weight shifts are tolerated only in mod_ones mode.
  CrystalGraph shifted = g;
  for (auto& node : shifted.nodes) node.wt = add(node.wt, {1, 1, 1});
  CHECK_FALSE(labeled_isomorphic(g, shifted, WeightMode::exact).isomorphic);
  CHECK(labeled_isomorphic(g, shifted, WeightMode::mod_ones).isomorphic);
}

TEST_CASE("tensor associativity up to isomorphism") {
  auto cells = enumerate_sdt(Shape::of({1}), 2);
  CrystalElement a = CrystalElement::finite(cells[0]);
  CrystalElement left = CrystalElement::tensor(CrystalElement::tensor(a, a), a);
  CrystalElement right = CrystalElement::tensor(a, CrystalElement::tensor(a, a));
  CrystalGraph gl = bfs_subcrystal({left});
  CrystalGraph gr = bfs_subcrystal({right});
  CHECK(labeled_isomorphic(gl, gr, WeightMode::exact).isomorphic);
}

TEST_CASE("graph JSON and DOT round trip") {
  CrystalGraph g = bfs_subcrystal({lim_gen_tensor_r(3, {-1, 0, 0})});
  Json j = graph_to_json(g);
  CrystalGraph back = graph_from_json(j);
  REQUIRE(back.nodes.size() == g.nodes.size());
  for (size_t v = 0; v < g.nodes.size(); ++v) {
    CHECK(back.nodes[v].elem == g.nodes[v].elem);
    CHECK(back.nodes[v].wt == g.nodes[v].wt);
  }
  CHECK(back.edges == g.edges);
  CHECK(check_axioms(back, true).passed());

  std::string dot = to_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);

  ShiftedTableau t = tab(3, {{3, 3, 3}, {2, 2}, {1}});
  CHECK(tableau_from_json(tableau_to_json(t)) == t);
}
