#include "qck/characters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qck {

long long CharacterSeries::at(const std::vector<int>& key) const {
  auto it = coeffs.find(key);
  return it == coeffs.end() ? 0 : it->second;
}

namespace {

// Alpha-exponent vector of the positive root epsilon_i - epsilon_j.
std::vector<int> root_alpha_exps(int n, int i, int j) {
  std::vector<int> e(n - 1, 0);
  for (int k = i; k < j; ++k) e[k - 1] = 1;
  return e;
}

}  // namespace

CharacterSeries verma_character(int n, int degree) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  CharacterSeries s{CharacterSeries::Basis::alpha, n, degree, {}};
  s.coeffs[std::vector<int>(std::max(n - 1, 0), 0)] = 1;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> step = root_alpha_exps(n, i, j);
      int h = j - i;
      std::map<std::vector<int>, long long> next;
      for (const auto& [v, c] : s.coeffs) {
        long long vh = alpha_height(v);
        std::vector<int> key = v;
        for (int k = 0; vh + static_cast<long long>(k) * h <= degree; ++k) {
          next[key] += c * (k == 0 ? 1 : 2);
          for (size_t t = 0; t < key.size(); ++t) key[t] += step[t];
        }
      }
      s.coeffs = std::move(next);
    }
  return s;
}

std::string verma_product_string(int n) {
  std::string out = "prod over positive roots of (1+e^a)/(1-e^a), roots:";
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) out += " e" + std::to_string(i) + "-e" + std::to_string(j);
  return out;
}

namespace {

using Series = std::map<std::vector<int>, long long>;

// Prefix sums must stay nonnegative for a monomial to still reach the
// nonnegative support: every later factor only lowers them.
bool prefix_ok(const std::vector<int>& v) {
  long long p = 0;
  for (size_t k = 0; k + 1 < v.size(); ++k) {
    p += v[k];
    if (p < 0) return false;
  }
  return true;
}

}  // namespace

CharacterSeries sdt_character(const Weight& lam, int n) {
  if (static_cast<int>(lam.size()) != n || !in_lambda_minus(lam))
    throw std::invalid_argument("not in Lambda^-");
  std::vector<int> parts = lambda_parts(lam);
  long long total = std::accumulate(parts.begin(), parts.end(), 0LL);

  // Denominator index pairs for equal entries of the decreasing vector.
  std::vector<std::pair<int, int>> repeated;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (parts[i] == parts[j]) repeated.emplace_back(i, j);

  auto mul_factor = [&](Series& s, int i, int j, bool plus_over_minus) {
    // plus_over_minus: (1+x)/(1-x) = 1+2x+2x^2+...; otherwise 1/(1+x) with
    // alternating signs. x = e^{-(epsilon_{i+1}-epsilon_{j+1})}, 0-based i<j.
    Series next;
    for (const auto& [v, c] : s) {
      std::vector<int> key = v;
      for (int k = 0;; ++k) {
        if (k > 0) {
          key[i] -= 1;
          key[j] += 1;
          if (!prefix_ok(key)) break;
        }
        long long coef = plus_over_minus ? (k == 0 ? 1 : 2) : (k % 2 == 0 ? 1 : -1);
        long long add = c * coef;
        if (add != 0) next[key] += add;
      }
    }
    for (auto it = next.begin(); it != next.end();)
      it = it->second == 0 ? next.erase(it) : std::next(it);
    s = std::move(next);
  };

  // Permutations of 0..n-1 with signs.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Series sum;
  do {
    int sign = 1;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) sign = -sign;
    // Monomial e^{w(parts)}: coordinate w(i) receives parts[i].
    std::vector<int> mono(n, 0);
    for (int k = 0; k < n; ++k) mono[perm[k]] = parts[k];
    Series term;
    if (prefix_ok(mono)) term[mono] = sign;
    // Denominator factors 1/(1+e^{-w(alpha)}).
    for (const auto& [i, j] : repeated) {
      int a = perm[i], b = perm[j];
      if (a > b) {
        // Flip to a positive root and absorb e^{-(eps_b - eps_a... )}.
        std::swap(a, b);
        Series shifted;
        for (const auto& [v, c] : term) {
          std::vector<int> key = v;
          key[a] -= 1;
          key[b] += 1;
          if (prefix_ok(key)) shifted[key] += c;
        }
        term = std::move(shifted);
      }
      mul_factor(term, a, b, false);
    }
    for (const auto& [v, c] : term) sum[v] += c;
  } while (std::next_permutation(perm.begin(), perm.end()));

  // Common factor over all positive roots.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) mul_factor(sum, i, j, true);

  CharacterSeries out{CharacterSeries::Basis::epsilon, n, 0, {}};
  for (const auto& [v, c] : sum) {
    if (c == 0) continue;
    bool nonneg = std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
    long long deg = std::accumulate(v.begin(), v.end(), 0LL);
    if (!nonneg || deg != total)
      throw std::logic_error("uncancelled monomial outside the character support");
    out.coeffs[v] = c;
  }
  return out;
}

std::map<Weight, long long> graded_dimensions(const CrystalGraph& g, int base_node) {
  if (base_node < 0 || base_node >= static_cast<int>(g.nodes.size()))
    throw std::out_of_range("base node");
  std::map<Weight, long long> counts;
  const Weight& base = g.nodes[base_node].wt;
  for (const auto& node : g.nodes) ++counts[sub(node.wt, base)];
  return counts;
}

}  // namespace qck
