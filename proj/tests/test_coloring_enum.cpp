#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "pushall/characterization.hpp"
#include "pushall/coloring_enum.hpp"
#include "pushall/oracle.hpp"

using namespace pushall;

static Bicoloring col(const char* s) { return Bicoloring::parse(s); }

static std::vector<AscentPair> rg_ascents(const Permutation& s, const Bicoloring& b, Color left, Color right) {
  std::vector<AscentPair> out;
  for (std::size_t i = 1; i <= s.size(); ++i)
    for (std::size_t j = i + 1; j <= s.size(); ++j)
      if (s.at(i) < s.at(j) && b.color(i) == left && b.color(j) == right) out.push_back({i, j});
  return out;
}

// RG: largest i, then smallest sigma_j.
static std::optional<AscentPair> distinguished_rg(const Permutation& s, const Bicoloring& b) {
  auto as = rg_ascents(s, b, Color::R, Color::G);
  if (as.empty()) return std::nullopt;
  return *std::min_element(as.begin(), as.end(), [&](auto x, auto y) {
    return x.i != y.i ? x.i > y.i : s.at(x.j) < s.at(y.j);
  });
}

// GR: smallest j, then largest sigma_i.
static std::optional<AscentPair> distinguished_gr(const Permutation& s, const Bicoloring& b) {
  auto as = rg_ascents(s, b, Color::G, Color::R);
  if (as.empty()) return std::nullopt;
  return *std::min_element(as.begin(), as.end(), [&](auto x, auto y) {
    return x.j != y.j ? x.j < y.j : s.at(x.i) > s.at(y.i);
  });
}

TEST(Propagate, Examples) {
  EXPECT_EQ(propagate_rg({1, 2}, {1, 2})->str(), "RG");
  EXPECT_EQ(propagate_gr({1, 2}, {1, 2})->str(), "GR");
  EXPECT_THROW(propagate_rg({2, 1}, {1, 2}), std::invalid_argument);
  EXPECT_THROW(propagate_gr({1, 2}, {2, 1}), std::invalid_argument);
}

TEST(Propagate, ExampleAgainstBruteForce) {
  const Permutation s{2, 4, 1, 3};
  auto p = propagate_rg(s, {3, 4});
  ASSERT_TRUE(p);
  bool some = false;
  for (const auto& b : brute_colorings(s))
    if (b.color(3) == Color::R && b.color(4) == Color::G && p->compatible_with(b)) some = true;
  EXPECT_TRUE(some);
  auto q = propagate_gr(s, {1, 2});
  ASSERT_TRUE(q);
  EXPECT_EQ(q->color(1), Color::G);
  EXPECT_EQ(q->color(2), Color::R);
}

// Propagation from the distinguished ascent never contradicts a valid coloring.
TEST(Propagate, ForcedByEveryValidColoring) {
  for (std::size_t n = 2; n <= 7; ++n)
    for_each_permutation(n, [&](const Permutation& s) {
      if (is_minus_decomposable(s)) return;
      for (const auto& b : brute_colorings(s)) {
        if (auto a = distinguished_rg(s, b)) {
          auto p = propagate_rg(s, *a);
          ASSERT_TRUE(p && p->compatible_with(b)) << s << " " << b;
        }
        if (auto a = distinguished_gr(s, b)) {
          auto p = propagate_gr(s, *a);
          ASSERT_TRUE(p && p->compatible_with(b)) << s << " " << b;
        }
      }
    });
}

// Some staircase hits a contradiction, and then no valid coloring is rooted there.
TEST(Propagate, ConflictMeansNoColoring) {
  bool found = false;
  for (std::size_t n = 2; n <= 6; ++n)
    for_each_permutation(n, [&](const Permutation& s) {
      if (is_minus_decomposable(s)) return;
      const auto valid = brute_colorings(s);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
          if (s.at(i) > s.at(j) || propagate_rg(s, {i, j})) continue;
          found = true;
          for (const auto& b : valid) {
            auto a = distinguished_rg(s, b);
            ASSERT_FALSE(a && a->i == i && a->j == j) << s << " " << b;
          }
        }
    });
  EXPECT_TRUE(found);
}

TEST(Shapes, MatchEachValidColoring) {
  for (std::size_t n = 1; n <= 7; ++n)
    for_each_permutation(n, [&](const Permutation& s) {
      if (is_minus_decomposable(s)) return;
      for (const auto& b : brute_colorings(s)) {
        auto rg = distinguished_rg(s, b);
        auto gr = distinguished_gr(s, b);
        std::optional<PartialBicoloring> shape;
        if (rg && gr) shape = c_star(s, rg->i, rg->j, gr->i, gr->j);
        else if (rg) shape = c_rg(s, rg->i, rg->j);
        else if (gr) shape = c_gr(s, gr->i, gr->j);
        else continue;
        ASSERT_TRUE(shape) << s << " " << b;
        ASSERT_EQ(shape->total(), b) << s << " " << b << " " << shape->str();
      }
    });
}

TEST(Shapes, StarOutsideTheFourDiagramsIsBlank) {
  bool found = false;
  for_each_permutation(4, [&](const Permutation& s) {
    for (std::size_t i = 1; i <= 4 && !found; ++i)
      for (std::size_t j = i + 1; j <= 4 && !found; ++j)
        for (std::size_t k = 1; k <= 4 && !found; ++k)
          for (std::size_t l = k + 1; l <= 4 && !found; ++l) {
            if (s.at(i) > s.at(j) || s.at(k) > s.at(l)) continue;
            if (auto p = c_star(s, i, j, k, l); p && p->is_blank()) found = true;
          }
  });
  EXPECT_TRUE(found);
}

TEST(Rooted, Examples) {
  EXPECT_EQ(c_rooted(Permutation::identity(3), 1, 1), col("GRR"));
  EXPECT_FALSE(c_rooted({2, 1}, 1, 1));
  EXPECT_THROW(c_rooted({2, 1}, 0, 1), std::out_of_range);
  EXPECT_THROW(c_rooted({2, 1}, 3, 1), std::out_of_range);
}

TEST(Rooted, CandidatesAreValid) {
  for_each_permutation(6, [&](const Permutation& s) {
    for (std::size_t r = 1; r <= 6; ++r)
      for (int m = 1; m <= 9; ++m)
        if (auto b = c_rooted(s, r, m)) ASSERT_TRUE(is_valid_coloring(s, *b));
  });
}

TEST(EnumerateIndecomposable, Examples) {
  EXPECT_EQ(enumerate_indecomposable({1}), (std::vector<Bicoloring>{col("G"), col("R")}));
  const Permutation s{2, 4, 1, 3};
  EXPECT_EQ(enumerate_indecomposable(s), brute_colorings(s));
  EXPECT_TRUE(enumerate_indecomposable({3, 5, 1, 6, 2, 4}).empty());
  EXPECT_EQ(enumerate_indecomposable_naive({1}).size(), 2u);
  EXPECT_EQ(enumerate_indecomposable_naive({2, 1, 3}), brute_colorings({2, 1, 3}));
  EXPECT_THROW(enumerate_indecomposable({3, 2, 1}), NotIndecomposable);
  EXPECT_THROW(enumerate_indecomposable_naive({2, 1}), NotIndecomposable);
}

TEST(EnumerateIndecomposable, EqualsBruteAndNaive) {
  for (std::size_t n = 1; n <= 7; ++n)
    for_each_permutation(n, [&](const Permutation& s) {
      if (is_minus_decomposable(s)) return;
      auto fast = enumerate_indecomposable(s);
      ASSERT_EQ(fast, brute_colorings(s)) << s;
      if (n <= 6) ASSERT_EQ(fast, enumerate_indecomposable_naive(s)) << s;
      ASSERT_LE(fast.size(), 9 * n + 2) << s;
    });
}

TEST(EnumerateColorings, Examples) {
  auto p = enumerate_colorings({3, 2, 1});
  ASSERT_EQ(p.blocks().size(), 3u);
  for (const auto& b : p.blocks()) {
    EXPECT_EQ(b.perm, Permutation{1});
    EXPECT_EQ(b.colorings.size(), 2u);
  }
  EXPECT_EQ(p.count(), 8);
  auto id = enumerate_colorings(Permutation::identity(5));
  EXPECT_EQ(id.blocks().size(), 1u);
  EXPECT_EQ(id.count(), 10);
  EXPECT_EQ(enumerate_colorings({1, 3, 2, 4, 6, 5}).count(), 0);
  EXPECT_EQ(enumerate_colorings({1, 3, 2, 4, 6, 5}).count(), BigCount(brute_colorings({1, 3, 2, 4, 6, 5}).size()));
  auto empty = enumerate_colorings(Permutation{});
  EXPECT_TRUE(empty.blocks().empty());
  EXPECT_EQ(empty.count(), 1);
  EXPECT_EQ(empty.materialize(), std::vector<Bicoloring>{Bicoloring{}});
}

TEST(EnumerateColorings, CursorIsSortedAndCountMatches) {
  for_each_permutation(7, [&](const Permutation& s) {
    auto p = enumerate_colorings(s);
    auto all = p.materialize();
    ASSERT_EQ(BigCount(all.size()), p.count());
    ASSERT_TRUE(std::adjacent_find(all.begin(), all.end(), [](auto& a, auto& b) { return !(a < b); }) == all.end());
    ASSERT_EQ(p.empty(), all.empty());
  });
}

TEST(Decide, Examples) {
  EXPECT_TRUE(is_pushall_sortable({2, 4, 3, 1}));
  EXPECT_FALSE(is_pushall_sortable({1, 3, 2, 4, 6, 5}));
  EXPECT_FALSE(is_pushall_sortable({3, 5, 1, 6, 2, 4}));
  EXPECT_TRUE(is_pushall_sortable(Permutation{}));
  EXPECT_EQ(count_colorings(Permutation::identity(50)), 100);
  EXPECT_EQ(count_colorings({3, 2, 1}), 8);
  EXPECT_EQ(count_colorings({1, 3, 2, 4, 6, 5}), 0);
  auto w = find_sorting_word({2, 4, 3, 1});
  ASSERT_TRUE(w);
  EXPECT_TRUE(is_valid_word({2, 4, 3, 1}, *w));
  EXPECT_TRUE(is_pushall_word(*w));
  EXPECT_FALSE(find_sorting_word({1, 3, 2, 4, 6, 5}));
}

TEST(Decide, DecreasingHasExponentialCount) {
  std::vector<int> v(200);
  for (int i = 0; i < 200; ++i) v[i] = 200 - i;
  EXPECT_EQ(count_colorings(Permutation(v)), BigCount(1) << 200);
}

// Sortable permutations form a class: deleting a point keeps sortability, and
// the sufficient condition implies it. Checked on random inputs of moderate size.
TEST(Decide, RandomConsistency) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 5 + rng() % 60;
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
    std::shuffle(v.begin(), v.end(), rng);
    Permutation s(v);
    if (sufficient_pushall_cs(s)) ASSERT_TRUE(is_pushall_sortable(s)) << s;
    if (!is_pushall_sortable(s)) continue;
    const std::size_t pos = 1 + rng() % n;
    ASSERT_TRUE(is_pushall_sortable(s.erase(pos))) << s << " minus " << pos;
    auto w = find_sorting_word(s);
    ASSERT_TRUE(w && is_valid_word(s, *w) && is_pushall_word(*w)) << s;
  }
}

TEST(Decide, RandomSortableFamilies) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 10 + rng() % 200;
    // increasing runs stacked in decreasing order avoid 213
    std::vector<int> v;
    int top = static_cast<int>(n);
    while (top > 0) {
      int len = 1 + static_cast<int>(rng() % std::min<std::size_t>(5, top));
      for (int k = top - len + 1; k <= top; ++k) v.push_back(k);
      top -= len;
    }
    Permutation s(v);
    ASSERT_TRUE(avoids(s, {Permutation{2, 1, 3}})) << s;
    ASSERT_TRUE(is_pushall_sortable(s)) << s;
  }
}
