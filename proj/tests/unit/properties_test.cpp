// Randomized invariants over seeded corpora.

#include <cmath>

#include <gtest/gtest.h>

#include "fewpaths/generators.hpp"
#include "fewpaths/layered.hpp"
#include "fewpaths/path_count.hpp"
#include "fewpaths/rng.hpp"
#include "fewpaths/spectral.hpp"
#include "fewpaths/svd.hpp"
#include "fewpaths/traversal.hpp"
#include "fewpaths/unambiguity.hpp"
#include "test_graphs.hpp"

using namespace fewpaths;
using namespace fewpaths::testing;

namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix int_adjacency(const DirectedGraph &g) {
  IntMatrix a(g.size(), std::vector<BigInt>(g.size(), 0));
  for (const auto &e : g.edges())
    a[e.from][e.to] = 1;
  return a;
}

IntMatrix multiply(const IntMatrix &a, const IntMatrix &b) {
  const auto n = a.size();
  IntMatrix c(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j)
          c[i][j] += a[i][k] * b[k][j];
  return c;
}

// I + A + ... + A^(len), i.e. walks of length <= len.
IntMatrix walk_sum(const DirectedGraph &g, std::size_t len) {
  const auto n = g.size();
  const auto a = int_adjacency(g);
  IntMatrix power(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    power[i][i] = 1;
  IntMatrix sum = power;
  for (std::size_t l = 1; l <= len; ++l) {
    power = multiply(power, a);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        sum[i][j] += power[i][j];
  }
  return sum;
}

DirectedGraph random_digraph(std::size_t n, double density, std::uint64_t seed) {
  Rng rng(seed);
  DirectedGraph g(n);
  for (Node i = 0; i < n; ++i)
    for (Node j = 0; j < n; ++j)
      if (rng.bernoulli(density))
        g.add_edge(i, j);
  return g;
}

const BigInt kBig = BigInt(1) << 200;

} // namespace

TEST(Properties, OracleEqualsPowerSeries) {
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      auto g = gen_random_dag(n, 0.1 + 0.1 * static_cast<double>(seed % 5), seed * 31 + n);
      auto expected = walk_sum(g, n - 1);
      auto oracle = count_paths_oracle(g, kBig);
      for (Node i = 0; i < n; ++i)
        for (Node j = 0; j < n; ++j)
          ASSERT_EQ(oracle.at(i, j), PathCount::finite(expected[i][j]));
    }
}

TEST(Properties, Nilpotency) {
  for (std::size_t n : {1, 2, 5, 17, 40, 64}) {
    auto g = gen_random_dag(n, 0.5, n);
    auto a = int_adjacency(g);
    IntMatrix power = a;
    for (std::size_t l = 1; l < n; ++l)
      power = multiply(power, a);
    for (const auto &row : power)
      for (const auto &x : row)
        ASSERT_EQ(x, 0);
  }
}

TEST(Properties, LaplacianTimesOracleIsIdentity) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = gen_random_dag(30, 0.15, seed);
    auto oracle = count_paths_oracle(g, kBig);
    DenseMatrix inv(g.size(), g.size());
    for (Node i = 0; i < g.size(); ++i)
      for (Node j = 0; j < g.size(); ++j)
        inv(i, j) = oracle.at(i, j).value().convert_to<double>();
    EXPECT_LE(max_abs_difference(counting_laplacian(g) * inv, DenseMatrix::identity(g.size())),
              1e-6);
  }
}

TEST(Properties, LayeredGraphIsAcyclic) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = random_digraph(1 + seed % 8, 0.3, seed);
    EXPECT_TRUE(is_acyclic(layer_graph(g)));
  }
}

TEST(Properties, LayeredCountsAreBoundedLengthWalks) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 1 + seed % 8;
    auto g = random_digraph(n, 0.35, 1000 + seed);
    auto expected = walk_sum(g, n - 1);
    auto lay = layer_graph(g);
    for (Node i = 0; i < n; ++i) {
      auto row = count_paths_from(lay, layered_node(i, 0, n), kBig);
      for (Node j = 0; j < n; ++j)
        ASSERT_EQ(row[layered_node(j, n, n)], PathCount::finite(expected[i][j]));
    }
  }
}

// closed walk through i of length 1..n-1
static bool short_cycle_through(const DirectedGraph &g, Node i) {
  const std::size_t n = g.size();
  std::vector<bool> frontier(n, false);
  frontier[i] = true;
  for (std::size_t len = 1; len < n; ++len) {
    std::vector<bool> next(n, false);
    for (Node u = 0; u < n; ++u)
      if (frontier[u])
        for (Node v : g.successors(u))
          next[v] = true;
    if (next[i])
      return true;
    frontier = std::move(next);
  }
  return false;
}

TEST(Properties, LayeredDiagonalDetectsShortCycles) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      auto g = graph_from_code(n, code);
      auto c = condense(g);
      auto lay = layer_graph(g);
      for (Node i = 0; i < n; ++i) {
        const auto row = count_paths_from(lay, i, kBig);
        const auto diag = row[layered_node(i, n, n)];
        ASSERT_EQ(short_cycle_through(g, i), diag.value() >= 2) << "n=" << n << " code=" << code;

        bool closes = false;
        for (Node x = 0; x < n; ++x)
          if (g.has_edge(x, i) && row[layered_node(x, n, n)].value() >= 1)
            closes = true;
        const bool on_cycle = c.cyclic[c.component[i]];
        ASSERT_EQ(on_cycle, closes || diag.value() >= 2) << "n=" << n << " code=" << code;
      }
    }
}

TEST(Properties, ClassifyIsMonotone) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = random_digraph(6, 0.15, 5000 + seed);
    for (std::uint64_t k : {1, 2, 4})
      for (Node s = 0; s < 6; ++s)
        for (Node t = 0; t < 6; ++t) {
          auto r = classify(g, s, t, k);
          if (r.strongly_unambiguous)
            EXPECT_TRUE(r.reach_unambiguous_s);
          if (r.reach_unambiguous_s)
            EXPECT_TRUE(r.unambiguous_st);
          EXPECT_EQ(r.unambiguous_st, !r.st_witness);
          EXPECT_EQ(r.reach_unambiguous_s, !r.reach_witness);
          EXPECT_EQ(r.strongly_unambiguous, !r.strong_witness);
        }
  }
}

TEST(Properties, StronglyFewSpectralBounds) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = gen_random_dag(10 + seed, 0.1 + 0.05 * static_cast<double>(seed % 3), seed);
    const double p = count_paths_oracle(g, kBig).max_finite()->convert_to<double>();
    const double n = static_cast<double>(g.size());
    auto d = svd(counting_laplacian(g));
    EXPECT_LE(d.sigma_max(), n * (1 + 1e-9));
    EXPECT_GE(d.sigma_min() * (1 + 1e-9), 1.0 / (n * p));
  }
}

TEST(Properties, OverlapAndNormIdentities) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = gen_random_dag(16, 0.2, 700 + seed);
    auto oracle = count_paths_oracle(g, kBig);
    auto d = svd(counting_laplacian(g));
    const double sqrt_n = std::sqrt(static_cast<double>(g.size()));
    for (Node s = 0; s < g.size(); ++s) {
      double row_p = 0, col_p = 0, row_norm = 0, col_norm = 0;
      for (Node j = 0; j < g.size(); ++j) {
        const double a = oracle.at(s, j).value().convert_to<double>();
        const double b = oracle.at(j, s).value().convert_to<double>();
        row_p = std::max(row_p, a);
        col_p = std::max(col_p, b);
        row_norm += a * a;
        col_norm += b * b;
      }
      double svd_row = 0, svd_col = 0;
      for (std::size_t j = 0; j < d.size(); ++j) {
        EXPECT_LE(std::abs(d.v(s, j)), d.sigma[j] * sqrt_n * row_p + 1e-8);
        EXPECT_LE(std::abs(d.u(s, j)), d.sigma[j] * sqrt_n * col_p + 1e-8);
        svd_row += d.v(s, j) * d.v(s, j) / (d.sigma[j] * d.sigma[j]);
        svd_col += d.u(s, j) * d.u(s, j) / (d.sigma[j] * d.sigma[j]);
      }
      EXPECT_NEAR(svd_row, row_norm, 1e-6 * row_norm);
      EXPECT_NEAR(svd_col, col_norm, 1e-6 * col_norm);
    }
  }
}

TEST(Properties, GeneratorsAreDeterministic) {
  EXPECT_EQ(gen_chain_figure1(7), gen_chain_figure1(7));
  EXPECT_EQ(gen_diamond_chain(7), gen_diamond_chain(7));
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    EXPECT_EQ(gen_random_dag(25, 0.3, seed), gen_random_dag(25, 0.3, seed));
}
