#pragma once

#include "qck/graph.hpp"

namespace qck {

/// Recovery data: lambda in Lambda^- (strictly decreasing parts for the
/// isomorphism to hold), integer shift k, and the derived marker weight
/// mu = sum (lambda_i - k) epsilon_{n+1-i}.
struct CutSpec {
  Weight lam;
  int k = 0;
  Weight mu;

  static CutSpec make(const std::vector<int>& lam_parts, int k, int n);
};

/// Connected component of the limit crystal tensored with r^vee_mu,
/// generated from the lowest generator under all raising and lowering
/// operators.
CrystalGraph cut_component(const Weight& mu, int n, long long max_nodes = 0);

struct CutVerify {
  bool ok = false;
  IsoResult iso;
  long long component_size = 0;
  long long sdt_size = 0;
};

/// Builds the component and the finite crystal of lambda's shape and tests
/// label- and weight-compatible isomorphism (weights modulo a global
/// (1,...,1) shift).
CutVerify verify_cut(const CutSpec& spec, int n, long long max_nodes = 0);

}  // namespace qck
