#include "qck/json_io.hpp"

#include <stdexcept>

namespace qck {

Json tableau_to_json(const ShiftedTableau& t) {
  Json j;
  j["n"] = t.rank();
  j["rows"] = t.grid();
  return j;
}

ShiftedTableau tableau_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("rows")) throw std::invalid_argument("tableau JSON needs n and rows");
  return ShiftedTableau(j.at("n").get<int>(), j.at("rows").get<Grid>());
}

Json element_to_json(const CrystalElement& e) {
  Json j;
  switch (e.kind()) {
    case CrystalElement::Kind::finite:
      j["kind"] = "finite";
      j["tableau"] = tableau_to_json(e.tableau());
      break;
    case CrystalElement::Kind::limit:
      j["kind"] = "limit";
      j["tableau"] = tableau_to_json(e.tableau());
      break;
    case CrystalElement::Kind::tmarker:
      j["kind"] = "t";
      j["lambda"] = e.marker_weight();
      break;
    case CrystalElement::Kind::rmarker:
      j["kind"] = "r";
      j["lambda"] = e.marker_weight();
      break;
    case CrystalElement::Kind::tensor:
      j["kind"] = "tensor";
      j["left"] = element_to_json(e.left());
      j["right"] = element_to_json(e.right());
      break;
  }
  return j;
}

CrystalElement element_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "finite") return CrystalElement::finite(tableau_from_json(j.at("tableau")));
  if (kind == "limit") return CrystalElement::limit(tableau_from_json(j.at("tableau")));
  if (kind == "t") return CrystalElement::t_marker(j.at("lambda").get<Weight>());
  if (kind == "r") return CrystalElement::r_marker(j.at("lambda").get<Weight>());
  if (kind == "tensor")
    return CrystalElement::tensor(element_from_json(j.at("left")), element_from_json(j.at("right")));
  throw std::invalid_argument("unknown element kind: " + kind);
}

namespace {

Json ext_to_json(const ExtInt& x) {
  if (x.minus_inf) return Json("-inf");
  return Json(x.v);
}

ExtInt ext_from_json(const Json& j) {
  if (j.is_string()) return ExtInt::neg_inf();
  return ExtInt::of(j.get<long long>());
}

}  // namespace

Json graph_to_json(const CrystalGraph& g) {
  Json j;
  j["nodes"] = Json::array();
  for (size_t v = 0; v < g.nodes.size(); ++v) {
    const GraphNode& node = g.nodes[v];
    Json nj;
    nj["id"] = v;
    nj["element"] = element_to_json(node.elem);
    nj["wt"] = node.wt;
    nj["eps"] = Json::array();
    nj["phi"] = Json::array();
    for (const auto& x : node.eps) nj["eps"].push_back(ext_to_json(x));
    for (const auto& x : node.phi) nj["phi"].push_back(ext_to_json(x));
    nj["depth"] = node.depth;
    j["nodes"].push_back(std::move(nj));
  }
  j["edges"] = Json::array();
  for (const auto& e : g.edges) {
    Json ej;
    ej["src"] = e.src;
    ej["label"] = std::to_string(e.label);
    ej["dst"] = e.dst;
    j["edges"].push_back(std::move(ej));
  }
  j["generators"] = g.generators;
  j["truncated"] = g.truncated;
  j["depth_cap"] = g.depth_cap;
  j["n"] = g.n;
  j["expect_nonneg_wt"] = g.expect_nonneg_wt;
  return j;
}

CrystalGraph graph_from_json(const Json& j) {
  CrystalGraph g;
  g.n = j.value("n", 0);
  g.truncated = j.value("truncated", false);
  g.depth_cap = j.value("depth_cap", -1);
  g.expect_nonneg_wt = j.value("expect_nonneg_wt", false);
  for (const auto& nj : j.at("nodes")) {
    GraphNode node{element_from_json(nj.at("element")), nj.at("wt").get<Weight>(), {}, {},
                   nj.value("depth", 0)};
    for (const auto& x : nj.at("eps")) node.eps.push_back(ext_from_json(x));
    for (const auto& x : nj.at("phi")) node.phi.push_back(ext_from_json(x));
    if (g.n == 0) g.n = node.elem.rank();
    g.nodes.push_back(std::move(node));
  }
  for (const auto& ej : j.at("edges"))
    g.edges.push_back({ej.at("src").get<int>(), std::stoi(ej.at("label").get<std::string>()),
                       ej.at("dst").get<int>()});
  g.generators = j.value("generators", std::vector<int>{});
  return g;
}

Json validation_to_json(const ValidationReport& rep) {
  Json j;
  j["valid"] = rep.valid;
  j["violations"] = Json::array();
  for (const auto& v : rep.violations) {
    Json vj;
    vj["kind"] = v.kind;
    vj["cells"] = Json::array();
    for (const auto& [r, c] : v.cells) vj["cells"].push_back(Json::array({r, c}));
    vj["detail"] = v.detail;
    j["violations"].push_back(std::move(vj));
  }
  return j;
}

Json axiom_report_to_json(const AxiomReport& rep) {
  Json j;
  j["passed"] = rep.passed();
  j["checks"] = rep.checks;
  j["violations"] = rep.violations;
  j["notes"] = rep.notes;
  return j;
}

}  // namespace qck
