#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "qck/characters.hpp"
#include "qck/finite.hpp"
#include "qck/xi.hpp"

using namespace qck;

TEST_CASE("verma character") {
  CharacterSeries s2 = verma_character(2, 3);
  for (int k = 0; k <= 3; ++k) CHECK(s2.at({k}) == (k == 0 ? 1 : 2));

  CharacterSeries s4 = verma_character(4, 0);
  CHECK(s4.at({0, 0, 0}) == 1);
  CHECK(s4.coeffs.size() == 1);

  // The single-alpha directions plateau at 2.
  CharacterSeries s3 = verma_character(3, 5);
  for (int k = 1; k <= 5; ++k) {
    CHECK(s3.at({k, 0}) == 2);
    CHECK(s3.at({0, k}) == 2);
  }
}

TEST_CASE("sdt character against the enumeration") {
  for (const auto& [parts, n] : std::vector<std::pair<std::vector<int>, int>>{
           {{1, 0}, 2}, {{2, 1}, 2}, {{1, 0, 0}, 3}, {{3, 1, 0}, 3}, {{2, 1, 0}, 3}, {{3, 2, 1}, 3}}) {
    Weight lam = lambda_from_parts(parts, n);
    CharacterSeries ch = sdt_character(lam, n);
    std::vector<int> shape_parts;
    for (int p : parts)
      if (p > 0) shape_parts.push_back(p);
    auto all = enumerate_sdt(Shape::of(shape_parts), n);
    std::map<std::vector<int>, long long> counts;
    for (const auto& t : all) {
      Weight c = content(t);
      ++counts[std::vector<int>(c.begin(), c.end())];
    }
    CHECK(ch.coeffs == counts);
    long long total = 0;
    for (const auto& [v, c] : ch.coeffs) total += c;
    CHECK(total == static_cast<long long>(all.size()));
  }

  // n = 1 collapses to a single monomial.
  CharacterSeries one = sdt_character(lambda_from_parts({4}, 1), 1);
  CHECK(one.coeffs.size() == 1);
  CHECK(one.at({4}) == 1);

  CHECK_THROWS_AS(sdt_character(Weight{-1, -1, 0}, 3), std::invalid_argument);
}

TEST_CASE("graded dimensions of the limit ball match the verma character") {
  for (int n : {2, 3}) {
    int cap = 6;
    CrystalGraph ball = limit_ball(n, cap);
    int base = ball.find(CrystalElement::limit(limit_generator(n)));
    REQUIRE(base >= 0);
    auto dims = graded_dimensions(ball, base);
    CharacterSeries verma = verma_character(n, cap);
    for (const auto& [exps, coeff] : verma.coeffs) {
      if (alpha_height(exps) > cap) continue;
      // Alpha exponents to epsilon coordinates.
      Weight w(n, 0);
      for (int i = 1; i < n; ++i) {
        w[i - 1] += exps[i - 1];
        w[i] -= exps[i - 1];
      }
      auto it = dims.find(w);
      long long got = it == dims.end() ? 0 : it->second;
      CHECK_MESSAGE(got == coeff, "n=", n, " exps height ", alpha_height(exps));
    }
  }
}

TEST_CASE("graded_dimensions basics") {
  BfsOptions opt;
  opt.depth = 0;
  CrystalGraph ball = bfs_subcrystal({CrystalElement::limit(limit_generator(3))}, opt);
  auto dims = graded_dimensions(ball, 0);
  CHECK(dims.size() == 1);
  CHECK(dims.at(Weight{0, 0, 0}) == 1);
}
