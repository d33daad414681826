#include "qck/weight.hpp"

#include <numeric>
#include <stdexcept>

namespace qck {

Weight add(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight rank mismatch");
  Weight r(a.size());
  for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

Weight sub(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight rank mismatch");
  Weight r(a.size());
  for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
  return r;
}

bool is_zero(const Weight& w) {
  for (int c : w)
    if (c != 0) return false;
  return true;
}

int wt_i(const Weight& w, int i) {
  if (i < 1 || i + 1 > static_cast<int>(w.size())) throw std::out_of_range("wt_i index");
  return w[i - 1] - w[i];
}

Weight alpha(int n, int i) {
  if (i < 1 || i > n - 1) throw std::out_of_range("alpha index");
  Weight r(n, 0);
  r[i - 1] = 1;
  r[i] = -1;
  return r;
}

std::vector<Weight> positive_roots(int n) {
  std::vector<Weight> roots;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Weight r(n, 0);
      r[i - 1] = 1;
      r[j - 1] = -1;
      roots.push_back(std::move(r));
    }
  return roots;
}

bool in_lambda_minus(const Weight& w) {
  int n = static_cast<int>(w.size());
  for (int k = 0; k < n; ++k) {
    int lk = -w[k];
    if (lk < 0) return false;
    if (k + 1 < n) {
      int lk1 = -w[k + 1];
      if (lk < lk1) return false;
      if (lk == lk1 && lk != 0) return false;
    }
  }
  return true;
}

Weight lambda_from_parts(const std::vector<int>& parts, int n) {
  if (static_cast<int>(parts.size()) > n) throw std::invalid_argument("too many parts for rank");
  Weight w(n, 0);
  for (size_t k = 0; k < parts.size(); ++k) w[k] = -parts[k];
  if (!in_lambda_minus(w)) throw std::invalid_argument("not in Lambda^-");
  return w;
}

std::vector<int> lambda_parts(const Weight& lam) {
  std::vector<int> parts(lam.size());
  for (size_t k = 0; k < lam.size(); ++k) parts[k] = -lam[k];
  return parts;
}

std::optional<std::vector<int>> alpha_exponents(const Weight& w) {
  long long sum = std::accumulate(w.begin(), w.end(), 0LL);
  if (sum != 0) return std::nullopt;
  std::vector<int> exps(w.size() - 1);
  int partial = 0;
  for (size_t k = 0; k + 1 < w.size(); ++k) {
    partial += w[k];
    exps[k] = partial;
  }
  return exps;
}

long long alpha_height(const std::vector<int>& exps) {
  return std::accumulate(exps.begin(), exps.end(), 0LL);
}

std::string to_string(const Weight& w) {
  std::string s = "(";
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(w[k]);
  }
  return s + ")";
}

ExtInt ext_max(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }

std::string to_string(const ExtInt& x) {
  return x.minus_inf ? std::string("-inf") : std::to_string(x.v);
}

}  // namespace qck
