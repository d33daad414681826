#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "qck/finite.hpp"
#include "qck/tableau.hpp"

using namespace qck;

namespace {

ShiftedTableau tab(int n, Grid rows) { return ShiftedTableau(n, std::move(rows)); }

// Independent oracle: try every pivot position.
bool hook_oracle(const std::vector<int>& w) {
  for (size_t k = 0; k < w.size(); ++k) {
    bool ok = true;
    for (size_t t = 0; t < k && ok; ++t) ok = w[t] >= w[t + 1];
    for (size_t t = k; t + 1 < w.size() && ok; ++t) ok = w[t] < w[t + 1];
    if (ok) return true;
  }
  return false;
}

// Independent oracle: cancel adjacent pairs in random order.
TaggedWord reduce_random_order(TaggedWord w, int i, std::mt19937& rng) {
  while (true) {
    std::vector<size_t> sites;
    for (size_t t = 0; t + 1 < w.size(); ++t)
      if (w[t].letter == i + 1 && w[t + 1].letter == i) sites.push_back(t);
    if (sites.empty()) return w;
    size_t s = sites[rng() % sites.size()];
    w.erase(w.begin() + s, w.begin() + s + 2);
  }
}

std::vector<int> letters(const TaggedWord& w) {
  std::vector<int> out;
  for (const auto& x : w) out.push_back(x.letter);
  return out;
}

// Exhaustive filter, no pruning; the cross-check for enumerate_sdt.
std::vector<ShiftedTableau> enumerate_naive(const Shape& shape, int n) {
  std::vector<ShiftedTableau> out;
  int cells = shape.cells();
  std::vector<int> flat(cells, 1);
  while (true) {
    Grid rows;
    int pos = 0;
    for (int p : shape.parts) {
      rows.emplace_back(flat.begin() + pos, flat.begin() + pos + p);
      pos += p;
    }
    ShiftedTableau t(n, rows);
    if (is_valid_sdt(t)) out.push_back(t);
    int k = cells - 1;
    while (k >= 0 && flat[k] == n) flat[k--] = 1;
    if (k < 0) break;
    ++flat[k];
  }
  return out;
}

}  // namespace

TEST_CASE("hook words") {
  CHECK(is_hook_word(std::vector<int>{3, 3, 3, 3, 2}));
  CHECK(is_hook_word(std::vector<int>{1}));
  CHECK_FALSE(is_hook_word(std::vector<int>{1, 2, 1}));
  CHECK_THROWS_AS(is_hook_word(std::vector<int>{}), std::invalid_argument);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    int len = 1 + rng() % 7;
    std::vector<int> w(len);
    for (int& x : w) x = 1 + rng() % 4;
    CHECK(is_hook_word(w) == hook_oracle(w));
  }
}

TEST_CASE("reading and restricted words") {
  ShiftedTableau t = tab(3, {{3, 3, 3, 3, 2}, {2, 2, 1}, {1}});
  CHECK(letters(reading_word(t)) == std::vector<int>{2, 3, 3, 3, 3, 1, 2, 2, 1});
  CHECK(letters(reading_word(tab(3, {{2}}))) == std::vector<int>{2});
  ShiftedTableau gen = lowest_generator(Shape::of({3, 2, 1}), 3);
  CHECK(letters(reading_word(gen)) == std::vector<int>{3, 3, 3, 2, 2, 1});

  CHECK(letters(restricted_word(t, 1)) == std::vector<int>{2, 1, 2, 2, 1});
  CHECK(letters(restricted_word(t, 2)) == std::vector<int>{2, 3, 3, 3, 3, 2, 2});
  CHECK(restricted_word(tab(3, {{3}}), 1).empty());
  CHECK_THROWS_AS(restricted_word(t, 3), std::out_of_range);

  // Tags are a bijection onto cells.
  TaggedWord rd = reading_word(t);
  CHECK(static_cast<int>(rd.size()) == t.cells());
  std::set<std::pair<int, int>> seen;
  for (const auto& x : rd) {
    CHECK(t.at(x.row, x.col) == x.letter);
    seen.insert({x.row, x.col});
  }
  CHECK(seen.size() == rd.size());
}

TEST_CASE("pair reduction") {
  ShiftedTableau t = tab(3, {{3, 3, 3, 3, 2}, {2, 2, 1}, {1}});
  TaggedWord r1 = pair_reduce(restricted_word(t, 1), 1);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].letter == 2);
  CHECK(r1[0].row == 1);
  CHECK(r1[0].col == 1);

  TaggedWord r2 = pair_reduce(restricted_word(t, 2), 2);
  CHECK(letters(r2) == std::vector<int>{2, 3, 3});
  CHECK(r2[0].row == 0);
  CHECK(r2[0].col == 4);

  CHECK(pair_reduce({}, 1).empty());
  CHECK_THROWS_AS(pair_reduce({{3, 0, 0}}, 1), std::invalid_argument);

  // Confluence against randomized cancellation order, and the i-before-i+1
  // normal form.
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    int len = rng() % 12;
    TaggedWord w;
    for (int k = 0; k < len; ++k) w.push_back({1 + static_cast<int>(rng() % 2), 0, k});
    TaggedWord norm = pair_reduce(w, 1);
    CHECK(letters(norm) == letters(reduce_random_order(w, 1, rng)));
    bool seen_two = false;
    for (const auto& x : norm) {
      if (x.letter == 2) seen_two = true;
      if (seen_two) CHECK(x.letter == 2);
    }
  }
}

TEST_CASE("validate_sdt") {
  CHECK(is_valid_sdt(tab(3, {{3, 3, 3, 3}, {2, 2, 2}, {1}})));
  CHECK(is_valid_sdt(tab(3, {{3, 3, 3, 3}, {2, 1, 2}, {1}})));

  ValidationReport rep = validate_sdt(tab(3, {{2, 3}, {1}}));
  CHECK_FALSE(rep.valid);
  bool has_u = false;
  for (const auto& v : rep.violations) has_u = has_u || v.kind == "type_U";
  CHECK(has_u);

  CHECK_THROWS_AS(tab(3, {{2, 2}, {1, 1}}), std::invalid_argument);

  // Every lowest generator is valid.
  for (const auto& parts : std::vector<std::vector<int>>{{1}, {2, 1}, {5, 3, 1}, {7, 4, 3, 2, 1}}) {
    int n = static_cast<int>(parts.size());
    CHECK(is_valid_sdt(lowest_generator(Shape::of(parts), n)));
  }
}

TEST_CASE("content") {
  CHECK(content(tab(3, {{3, 3, 3, 3, 2}, {2, 2, 1}, {1}})) == Weight{2, 3, 4});
  CHECK(content(ShiftedTableau(3, {})) == Weight{0, 0, 0});
  CHECK(content(lowest_generator(Shape::of({7, 4, 3, 2, 1}), 5)) == Weight{1, 2, 3, 4, 7});
}

TEST_CASE("enumerate_sdt") {
  auto single = enumerate_sdt(Shape::of({1}), 3);
  REQUIRE(single.size() == 3);

  // Pruned enumeration agrees with the exhaustive filter.
  for (const auto& [parts, n] :
       std::vector<std::pair<std::vector<int>, int>>{{{3, 1}, 3}, {{2, 1}, 2}, {{4}, 3}, {{3, 2}, 3}}) {
    auto fast = enumerate_sdt(Shape::of(parts), n);
    auto naive = enumerate_naive(Shape::of(parts), n);
    REQUIRE(fast.size() == naive.size());
    std::set<std::string> a, b;
    for (const auto& t : fast) a.insert(t.repr());
    for (const auto& t : naive) b.insert(t.repr());
    CHECK(a == b);
  }

  // Frozen regression constant, computed by the exhaustive oracle.
  CHECK(enumerate_sdt(Shape::of({3, 1}), 3).size() == 24);

  // red_i preserves the letter-count difference for every enumerated SDT.
  for (const auto& t : enumerate_sdt(Shape::of({3, 1}), 3)) {
    for (int i = 1; i <= 2; ++i) {
      Weight c = content(t);
      int before = c[i - 1] - c[i];
      int red_i_count = 0, red_i1_count = 0;
      for (const auto& x : red_word(t, i)) (x.letter == i ? red_i_count : red_i1_count)++;
      CHECK(before == red_i_count - red_i1_count);
    }
  }

  CHECK_THROWS_AS(enumerate_sdt(Shape::of({6, 5, 4}), 4, 50), std::runtime_error);
}
