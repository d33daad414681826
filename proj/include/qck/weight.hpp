#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qck {

/// Integer weight in the epsilon basis of Z^n; coords[k] is the coefficient
/// of epsilon_{k+1}.
using Weight = std::vector<int>;

Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);
bool is_zero(const Weight& w);

/// wt_i = coords[i-1] - coords[i], for i in 1..n-1.
int wt_i(const Weight& w, int i);

/// Simple root alpha_i = epsilon_i - epsilon_{i+1}, 1 <= i <= n-1.
Weight alpha(int n, int i);

/// Positive roots epsilon_i - epsilon_j, i < j, in lexicographic (i, j) order.
std::vector<Weight> positive_roots(int n);

/// Membership in Lambda^-: w = (-l1, ..., -ln) with l1 >= l2 >= ... >= ln >= 0
/// and equal consecutive parts only when zero.
bool in_lambda_minus(const Weight& w);

/// Lambda^- element from its nonnegative part tuple (l1, ..., ln); stored
/// with negated coordinates.
Weight lambda_from_parts(const std::vector<int>& parts, int n);

/// Nonnegative part tuple (l1, ..., ln) of a Lambda^- element.
std::vector<int> lambda_parts(const Weight& lam);

/// Exponents (k_1, ..., k_{n-1}) with w = sum k_i alpha_i, if w lies in the
/// root lattice (coordinate sum zero). Partial sums may be negative.
std::optional<std::vector<int>> alpha_exponents(const Weight& w);

/// Sum of alpha exponents; only meaningful on the root lattice.
long long alpha_height(const std::vector<int>& exps);

std::string to_string(const Weight& w);

/// Integer extended with a single -infinity value, ordered below all
/// integers; addition saturates at -infinity.
struct ExtInt {
  long long v = 0;
  bool minus_inf = false;

  static ExtInt neg_inf() { return ExtInt{0, true}; }
  static ExtInt of(long long x) { return ExtInt{x, false}; }

  ExtInt plus(long long x) const { return minus_inf ? *this : ExtInt{v + x, false}; }

  friend bool operator==(const ExtInt& a, const ExtInt& b) {
    if (a.minus_inf || b.minus_inf) return a.minus_inf == b.minus_inf;
    return a.v == b.v;
  }
  friend bool operator!=(const ExtInt& a, const ExtInt& b) { return !(a == b); }
  friend bool operator<(const ExtInt& a, const ExtInt& b) {
    if (a.minus_inf) return !b.minus_inf;
    if (b.minus_inf) return false;
    return a.v < b.v;
  }
  friend bool operator<=(const ExtInt& a, const ExtInt& b) { return a < b || a == b; }
};

ExtInt ext_max(const ExtInt& a, const ExtInt& b);
std::string to_string(const ExtInt& x);

}  // namespace qck
