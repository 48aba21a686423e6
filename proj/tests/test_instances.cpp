#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "pvclift/instances/graph.hpp"
#include "pvclift/instances/pvc.hpp"
#include "pvclift/instances/var_set.hpp"

using namespace pvclift;
using namespace pvclift::instances;
using linalg::make_rational;

namespace {

Graph random_graph(oracle::RationalGen& gen, int n, bool weighted) {
  std::vector<Graph::Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (gen.integer(0, 1)) edges.emplace_back(i, j);
    }
  }
  std::vector<Rational> w;
  if (weighted) {
    for (int i = 0; i < n; ++i) w.push_back(make_rational(gen.integer(1, 6), gen.integer(1, 3)));
  }
  return Graph(n, edges, w);
}

// Straightforward reference: every subset, every edge, no bit tricks.
Rational naive_opt(const Graph& g, int t) {
  const int n = g.num_vertices();
  std::optional<Rational> best;
  for (long mask = 0; mask < (1L << n); ++mask) {
    int covered = 0;
    for (const auto& [i, j] : g.edges()) covered += ((mask >> (i - 1)) & 1) || ((mask >> (j - 1)) & 1);
    if (covered < t) continue;
    Rational w;
    for (int v = 1; v <= n; ++v) {
      if (mask >> (v - 1) & 1) w += g.weight(v);
    }
    if (!best || w < *best) best = w;
  }
  return *best;
}

}  // namespace

TEST(Graph, CliqueEdgeCounts) {
  EXPECT_EQ(make_clique(4).num_edges(), 6u);
  EXPECT_EQ(make_clique(10).num_edges(), 45u);
  EXPECT_EQ(make_clique(1).num_edges(), 0u);
  EXPECT_THROW(make_clique(0), std::invalid_argument);
}

TEST(Graph, StarLayout) {
  const auto g = make_star(3);
  EXPECT_EQ(g.num_vertices(), 4);
  EXPECT_EQ(g.edges(), (std::vector<Graph::Edge>{{1, 4}, {2, 4}, {3, 4}}));
  EXPECT_EQ(make_star(1).num_edges(), 1u);
  EXPECT_EQ(make_star(5).num_vertices(), 6);
  EXPECT_EQ(make_star(5).num_edges(), 5u);
  EXPECT_THROW(make_star(0), std::invalid_argument);
}

TEST(Graph, ValidationAndNormalization) {
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{1, 4}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{1, 2}, {2, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {}, {1, 2}), std::invalid_argument);
  const Graph g(3, {{3, 1}, {2, 1}});
  EXPECT_EQ(g.edges(), (std::vector<Graph::Edge>{{1, 2}, {1, 3}}));
  EXPECT_EQ(g.edge_index(3, 1), 1);
  EXPECT_EQ(g.edge_index(2, 3), -1);
  EXPECT_TRUE(g.unit_weights());
}

TEST(Graph, ParseRoundTrip) {
  const auto g = parse_graph("# triangle plus pendant\n4 4\n1 2\n2 3\n1 3\n\n3 4\nw 4 5/2\n");
  EXPECT_EQ(g.num_vertices(), 4);
  EXPECT_EQ(g.num_edges(), 4u);
  EXPECT_EQ(g.weight(4), make_rational(5, 2));
  EXPECT_EQ(g.weight(1), 1);
  EXPECT_EQ(parse_graph(format_graph(g)), g);
}

TEST(Graph, ParseErrorsCarryLineNumbers) {
  auto message = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("2 1\n1 1\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("2 2\n1 2\n").find("2 edges"), std::string::npos);
  EXPECT_NE(message("3 1\n1 2\nw 9 1\n").find("line 3"), std::string::npos);
  EXPECT_EQ(message("").find("header") != std::string::npos, true);
}

TEST(VarSet, CanonicalOrderAndUniverseLayout) {
  const Universe u(make_clique(3));
  EXPECT_EQ(u.size(), 6u);
  EXPECT_EQ(u.vertex_id(1), 0u);
  EXPECT_EQ(u.edge_id(1, 2), 3u);
  EXPECT_EQ(u.edge_id(3, 2), 5u);
  EXPECT_EQ(u.name(4), "e1-3");
  const VarSet s = u.make_set({VarIndex::edge(2, 3), VarIndex::vertex(2), VarIndex::vertex(2)});
  EXPECT_EQ(s.ids(), (std::vector<VarId>{1, 5}));
  EXPECT_EQ(u.describe(s), "{v2,e2-3}");
  EXPECT_TRUE(canonical_less(VarSet{5}, VarSet{0, 1}));
  EXPECT_TRUE(canonical_less(VarSet{0, 2}, VarSet{1, 2}));
}

TEST(PvcLp, RowAndVariableCounts) {
  const auto lp = build_pvc_lp(make_star(3), 2);
  EXPECT_EQ(lp.num_variables(), 7u);
  EXPECT_EQ(lp.num_rows(), 3u + 1u + 14u);
  const auto k4 = build_pvc_lp(make_clique(4), 6);
  EXPECT_EQ(k4.rows()[6].name, "demand");
  EXPECT_EQ(k4.rows()[6].rhs, 6);
  EXPECT_THROW(build_pvc_lp(make_clique(4), 7), std::invalid_argument);
  EXPECT_THROW(build_pvc_lp(make_clique(4), -1), std::invalid_argument);
  EXPECT_EQ(lp.variable_names()[0], "x_v1");
  EXPECT_EQ(lp.variable_names()[4], "x_e1-4");
}

TEST(PvcLp, StarValueIsTOverN) {
  for (int n = 1; n <= 8; ++n) {
    for (int t = 1; t <= n; ++t) {
      const auto r = linalg::lp_solve(build_pvc_lp(make_star(n), t));
      ASSERT_EQ(r.status, linalg::LpStatus::optimal);
      EXPECT_EQ(r.value, make_rational(t, n)) << "n=" << n << " t=" << t;
    }
  }
}

TEST(PvcLp, CliqueValueIsTOverNMinusOne) {
  const auto r = linalg::lp_solve(build_pvc_lp(make_clique(5), 2));
  EXPECT_EQ(r.value, make_rational(1, 2));
  for (int n = 3; n <= 7; ++n) {
    for (int t = 1; t < n; ++t) {
      EXPECT_EQ(linalg::lp_solve(build_pvc_lp(make_clique(n), t)).value, make_rational(t, n - 1));
    }
  }
}

TEST(PvcLp, FullDemandIsVertexCoverRelaxation) {
  // t = |E| on a triangle: every edge must be covered, LP value 3/2
  const auto g = make_clique(3);
  const auto r = linalg::lp_solve(build_pvc_lp(g, 3));
  EXPECT_EQ(r.value, make_rational(3, 2));
}

TEST(BruteForce, Examples) {
  for (int n = 1; n <= 7; ++n) {
    for (int t = 1; t <= n; ++t) EXPECT_EQ(brute_force_opt(make_star(n), t), 1);
  }
  for (int n = 2; n <= 8; ++n) {
    for (int t = 1; t < n; ++t) EXPECT_EQ(brute_force_opt(make_clique(n), t), 1);
  }
  EXPECT_EQ(brute_force_opt(make_clique(5), 0), 0);
  EXPECT_EQ(brute_force_cover(make_clique(5), 0).cover, std::vector<int>{});
  EXPECT_THROW(brute_force_opt(make_clique(25), 1), std::invalid_argument);
  EXPECT_THROW(brute_force_opt(make_clique(4), 7), std::invalid_argument);
}

TEST(BruteForceProperty, MatchesNaiveAndLpIsARelaxation) {
  oracle::RationalGen gen(99);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = gen.integer(1, 8);
    const Graph g = random_graph(gen, n, trial % 2 == 1);
    const int t = gen.integer(0, static_cast<int>(g.num_edges()));
    const auto opt = brute_force_cover(g, t, Execution::serial);
    ASSERT_EQ(opt.value, naive_opt(g, t));
    ASSERT_EQ(brute_force_cover(g, t, Execution::parallel).cover, opt.cover);

    const auto lp = build_pvc_lp(g, t);
    const auto point = integral_point(g, opt.cover);
    ASSERT_TRUE(lp.is_feasible(point));
    ASSERT_EQ(lp.evaluate(point), opt.value);
    const auto r = linalg::lp_solve(lp);
    ASSERT_EQ(r.status, linalg::LpStatus::optimal);
    ASSERT_LE(r.value, opt.value);
  }
}

TEST(BruteForceProperty, RelaxationSoundOnAllSmallGraphsAndDemands) {
  oracle::RationalGen gen(3);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_graph(gen, gen.integer(8, 10), false);
    for (int t = 0; t <= static_cast<int>(g.num_edges()); t += 3) {
      const auto r = linalg::lp_solve(build_pvc_lp(g, t));
      ASSERT_LE(r.value, brute_force_opt(g, t));
    }
  }
}
