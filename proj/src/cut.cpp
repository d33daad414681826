#include "qck/cut.hpp"

#include <stdexcept>

#include "qck/xi.hpp"

namespace qck {

CutSpec CutSpec::make(const std::vector<int>& lam_parts, int k, int n) {
  CutSpec spec;
  spec.lam = lambda_from_parts(lam_parts, n);
  spec.k = k;
  spec.mu.assign(n, 0);
  std::vector<int> parts = lambda_parts(spec.lam);
  for (int i = 1; i <= n; ++i) spec.mu[n - i] = parts[i - 1] - k;
  return spec;
}

CrystalGraph cut_component(const Weight& mu, int n, long long max_nodes) {
  if (static_cast<int>(mu.size()) != n) throw std::invalid_argument("mu rank mismatch");
  CrystalElement gen = CrystalElement::tensor(CrystalElement::limit(limit_generator(n)),
                                              CrystalElement::r_marker(mu));
  BfsOptions opt;
  opt.max_nodes = max_nodes;
  return bfs_subcrystal({gen}, opt);
}

CutVerify verify_cut(const CutSpec& spec, int n, long long max_nodes) {
  CutVerify out;
  CrystalGraph component = cut_component(spec.mu, n, max_nodes);

  std::vector<int> parts = lambda_parts(spec.lam);
  std::vector<int> shape_parts;
  for (int p : parts)
    if (p > 0) shape_parts.push_back(p);
  Shape shape = Shape::of(shape_parts);
  CrystalElement gen = CrystalElement::finite(lowest_generator(shape, n));
  BfsOptions opt;
  opt.max_nodes = max_nodes;
  CrystalGraph sdt = bfs_subcrystal({gen}, opt);

  out.component_size = static_cast<long long>(component.nodes.size());
  out.sdt_size = static_cast<long long>(sdt.nodes.size());
  out.iso = labeled_isomorphic(component, sdt, WeightMode::mod_ones);
  out.ok = out.iso.isomorphic;
  return out;
}

}  // namespace qck
