#pragma once

#include <map>
#include <string>
#include <vector>

#include "qck/graph.hpp"
#include "qck/weight.hpp"

namespace qck {

/// Formal character with integer coefficients. The alpha basis keys are
/// exponent vectors (k_1, ..., k_{n-1}) truncated at total height
/// degree_cap; the epsilon basis keys are exponent vectors in Z^n and the
/// series is exact (degree_cap unused).
struct CharacterSeries {
  enum class Basis { alpha, epsilon };
  Basis basis;
  int n = 0;
  int degree_cap = 0;
  std::map<std::vector<int>, long long> coeffs;

  long long at(const std::vector<int>& key) const;
};

/// Truncated expansion of prod_{alpha in Phi+} (1+e^alpha)/(1-e^alpha) in
/// the alpha basis, heights <= degree.
CharacterSeries verma_character(int n, int degree);

/// Symbolic form of the product, for audit output.
std::string verma_product_string(int n);

/// Exact character of SDT(lambda) in the epsilon basis, by the alternating
/// sum over S_n with the common factor prod (1+e^-alpha)/(1-e^-alpha).
/// All monomials off the nonnegative support must cancel (asserted).
CharacterSeries sdt_character(const Weight& lam, int n);

/// Node counts keyed by wt - wt(base).
std::map<Weight, long long> graded_dimensions(const CrystalGraph& g, int base_node);

}  // namespace qck
