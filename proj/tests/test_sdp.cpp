#include <gtest/gtest.h>

#include "oracle.hpp"
#include "pvclift/instances/pvc.hpp"
#include "pvclift/linalg/simplex.hpp"
#include "pvclift/sdp/hs_sdp.hpp"

using namespace pvclift;
using namespace pvclift::sdp;
using linalg::make_rational;

TEST(StarSdp, InnerProducts) {
  const auto s4 = build_star_sdp_solution(4, 2);
  EXPECT_EQ(s4.gram(5, 0), 0);
  EXPECT_EQ(s4.gram(1, 0), -1);
  EXPECT_EQ(s4.gram(3, 2), 1);

  const auto s10 = build_star_sdp_solution(10, 1);
  EXPECT_EQ(s10.gram(11, 4), make_rational(4, 5));
  EXPECT_EQ(s10.gram(11, 0), make_rational(-4, 5));
  for (std::size_t a = 0; a < s10.gram.dim(); ++a) EXPECT_EQ(s10.gram(a, a), 1);
}

TEST(StarSdp, RejectsDemandAboveHalf) {
  EXPECT_THROW(build_star_sdp_solution(5, 3), std::invalid_argument);
  EXPECT_THROW(build_star_sdp_solution(5, 0), std::invalid_argument);
  EXPECT_NO_THROW(build_star_sdp_solution(6, 3));
}

TEST(StarSdp, FeasibleAcrossRange) {
  for (int n = 2; n <= 20; ++n) {
    for (int t = 1; 2 * t <= n; ++t) {
      const auto sol = build_star_sdp_solution(n, t);
      SdpVerifyOptions opts;
      opts.integral_opt = Rational(1);
      const auto v = verify_hs_sdp(sol, opts);
      ASSERT_TRUE(v.feasible) << "n=" << n << " t=" << t;
      EXPECT_TRUE(linalg::verdict_consistent(sol.gram, v.psd));
      EXPECT_GT(oracle::min_eigenvalue(sol.gram), -1e-9);
      EXPECT_EQ(v.min_edge_slack, 4 - make_rational(4 * t, n));
      EXPECT_EQ(v.demand_lhs, 4 * t);
      EXPECT_EQ(v.objective_value, make_rational(t, n));
      EXPECT_EQ(v.integrality_gap_lower_bound, make_rational(n, t));
      EXPECT_EQ(v.constraints_checked, static_cast<std::size_t>(n + 2 + 2 * n + 1));
    }
  }
}

TEST(StarSdp, ValueMatchesLpRelaxationAndBruteForce) {
  for (auto [n, t] : std::vector<std::pair<int, int>>{{4, 2}, {10, 1}, {10, 2}, {12, 3}}) {
    const auto g = instances::make_star(n);
    const auto lp = linalg::lp_solve(instances::build_pvc_lp(g, t));
    ASSERT_EQ(lp.status, linalg::LpStatus::optimal);
    const auto v = verify_hs_sdp(build_star_sdp_solution(n, t));
    EXPECT_EQ(v.objective_value, lp.value);
    ASSERT_TRUE(v.integral_opt);
    EXPECT_EQ(*v.integral_opt, 1);
  }
}

TEST(IntegralGram, CoverIsFeasibleWithItsWeight) {
  const instances::Graph g(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}},
                           {1, make_rational(1, 2), 3, 1, make_rational(2, 3)});
  const auto opt = instances::brute_force_cover(g, 3);
  const auto v = verify_hs_sdp(integral_gram_solution(g, 3, opt.cover));
  EXPECT_TRUE(v.feasible);
  EXPECT_EQ(v.objective_value, opt.value);
  EXPECT_EQ(v.integrality_gap_lower_bound, Rational(1));
}

TEST(IntegralGram, RejectsOutOfRangeVertex) {
  EXPECT_THROW(integral_gram_solution(instances::make_clique(3), 1, {4}), std::invalid_argument);
}

TEST(SdpVerify, ReportsFirstViolatedConstraint) {
  auto sol = build_star_sdp_solution(6, 2);
  sol.t = 3;
  auto v = verify_hs_sdp(sol);
  EXPECT_FALSE(v.feasible);
  ASSERT_TRUE(v.violated);
  EXPECT_EQ(v.violated->name, "demand");
  EXPECT_LT(v.violated->slack, 0);

  auto bad = build_star_sdp_solution(6, 2);
  bad.gram(3, 3) = 2;
  v = verify_hs_sdp(bad);
  ASSERT_TRUE(v.violated);
  EXPECT_EQ(v.violated->name, "unit v3");
  EXPECT_EQ(v.constraints_checked, 4u);
}

TEST(SdpVerify, NonPsdGramFailsWithWitness) {
  // v_1 = v_2 = -v_0 but v_1 . v_2 = -1 is not realizable
  auto sol = integral_gram_solution(instances::make_clique(2), 1, {});
  sol.gram(2, 1) = -1;
  const auto v = verify_hs_sdp(sol);
  EXPECT_FALSE(v.gram_psd);
  EXPECT_FALSE(v.feasible);
  EXPECT_TRUE(linalg::verdict_consistent(sol.gram, v.psd));
  EXPECT_LT(oracle::min_eigenvalue(sol.gram), 0);
}

TEST(SdpVerify, RandomGramsAgreeWithEigenOracle) {
  oracle::RationalGen gen(42);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = gen.integer(2, 6);
    GramSolution sol{gen.symmetric(static_cast<std::size_t>(n) + 1, 3, 3), instances::make_clique(n), 1};
    const auto v = verify_hs_sdp(sol);
    const double lo = oracle::min_eigenvalue(sol.gram);
    if (lo < -1e-9) {
      EXPECT_FALSE(v.gram_psd);
    } else if (lo > 1e-9) {
      EXPECT_TRUE(v.gram_psd);
    }
  }
}

TEST(SdpVerify, DimensionMismatchThrows) {
  GramSolution sol{SymMatrix(3), instances::make_clique(3), 1};
  EXPECT_THROW(verify_hs_sdp(sol), std::invalid_argument);
}

TEST(SdpVerify, SerialAndParallelAgree) {
  const auto sol = build_star_sdp_solution(16, 5);
  SdpVerifyOptions s, p;
  s.execution = Execution::serial;
  p.execution = Execution::parallel;
  const auto a = verify_hs_sdp(sol, s);
  const auto b = verify_hs_sdp(sol, p);
  EXPECT_EQ(a.feasible, b.feasible);
  EXPECT_EQ(a.objective_value, b.objective_value);
  EXPECT_EQ(a.integral_opt, b.integral_opt);
}
