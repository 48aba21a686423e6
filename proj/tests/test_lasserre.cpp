#include <gtest/gtest.h>

#include "oracle.hpp"
#include "pvclift/instances/graph.hpp"
#include "pvclift/instances/pvc.hpp"
#include "pvclift/lasserre/lasserre.hpp"
#include "pvclift/linalg/psd.hpp"

using namespace pvclift;
using namespace pvclift::lasserre;
using instances::VarId;
using linalg::make_rational;

namespace {

instances::PvcConstraint demand(const moments::MomentVector& mv, const Rational& t) {
  instances::PvcConstraint c{instances::PvcConstraint::Kind::demand, 0, {}, t, "demand"};
  const auto& u = mv.universe();
  for (VarId id = static_cast<VarId>(u.num_vertices()); id < u.size(); ++id) c.terms.emplace_back(id, Rational(1));
  return c;
}

}  // namespace

TEST(CoveredEdges, Examples) {
  EXPECT_EQ(covered_edges(5, 2), 7);
  EXPECT_EQ(covered_edges(9, 0), 0);
  EXPECT_EQ(covered_edges(9, 1), 8);
  EXPECT_EQ(covered_edges(6, 6), 15);
  EXPECT_THROW(covered_edges(4, 5), std::invalid_argument);
  EXPECT_THROW(covered_edges(4, -1), std::invalid_argument);
}

TEST(ExpectedSlack, Examples) {
  EXPECT_EQ(expected_slack(2, 0, 1), 1);
  EXPECT_EQ(expected_slack(10, 1, make_rational(1, 28)), make_rational(1691, 784));
  EXPECT_EQ(expected_slack(7, 3, 0), -3);
}

TEST(Zbar, EntriesFollowClosedForm) {
  const int n = 9;
  const Rational t = 2;
  const Rational p = make_rational(1, 7);
  const auto ls = build_zbar(n, t, p);
  ASSERT_EQ(ls.zbar.dim(), 10u);
  EXPECT_EQ(ls.zbar(0, 0), expected_slack(n, t, p));
  EXPECT_EQ(ls.zbar(0, 3), p * (expected_slack(n - 1, t, p) + (n - 1)));
  EXPECT_EQ(ls.zbar(3, 3), ls.zbar(0, 3));
  EXPECT_EQ(ls.zbar(2, 5), p * p * (expected_slack(n - 2, t, p) + Rational(covered_edges(n, 2))));
  EXPECT_EQ(ls.s_values.at(n), ls.zbar(0, 0));
  EXPECT_EQ(ls.c_values.at({n, 1}), n - 1);
  EXPECT_THROW(build_zbar(1, 0, 0), std::invalid_argument);
}

TEST(Zbar, ClosedFormMatchesExhaustiveSummation) {
  EXPECT_EQ(build_zbar(4, 1, make_rational(1, 2)).zbar, build_zbar_exhaustive(4, 1, make_rational(1, 2)));
  for (int n = 4; n <= 9; ++n) {
    for (int t = 0; t <= 3; ++t) {
      for (const Rational& p : {Rational(0), make_rational(1, 7), make_rational(1, 2), Rational(1)}) {
        ASSERT_EQ(build_zbar(n, t, p).zbar, build_zbar_exhaustive(n, t, p, Execution::serial))
            << "n=" << n << " t=" << t << " p=" << p;
      }
    }
  }
  EXPECT_THROW(build_zbar_exhaustive(21, 1, 0), std::invalid_argument);
}

TEST(Zbar, SerialAndParallelExhaustiveAgree) {
  const Rational p = make_rational(3, 17);
  EXPECT_EQ(build_zbar_exhaustive(12, 2, p, Execution::serial), build_zbar_exhaustive(12, 2, p, Execution::parallel));
}

TEST(Zbar, IsTheVertexMinorOfTheMomentSlackMatrix) {
  for (const Rational& p : {make_rational(1, 6), make_rational(2, 5)}) {
    const int n = 6;
    const moments::MomentVector mv(moments::DistParams(instances::make_clique(n), p));
    const auto full = slack_matrix(mv, demand(mv, 2));
    std::vector<std::size_t> idx{0};
    for (int i = 1; i <= n; ++i) idx.push_back(1 + mv.universe().vertex_id(i));
    EXPECT_EQ(full.principal_submatrix(idx), build_zbar(n, 2, p).zbar);
  }
}

TEST(AllOnesEigenvalue, AgreesWithSchurComplementAndOracle) {
  for (auto [n, t, p] : std::vector<std::tuple<int, int, Rational>>{
           {8, 1, make_rational(1, 15)}, {12, 1, make_rational(1, 28)}, {10, 2, make_rational(1, 7)}, {6, 1, 1}}) {
    const auto ls = build_zbar(n, t, p);
    ASSERT_GT(ls.zbar(0, 0), 0);
    const Rational lam = allones_eigenvalue_after_schur(ls);
    EXPECT_EQ(lam, allones_eigenvalue_closed_form(n, t, p));
    const auto m = linalg::schur_complement(ls.zbar, 0);
    for (std::size_t i = 0; i < m.dim(); ++i) {
      Rational row;
      for (std::size_t j = 0; j < m.dim(); ++j) row += m(i, j);
      ASSERT_EQ(row, lam);
    }
    const auto ev = oracle::eigenvalues(m);
    double closest = 1e9;
    for (int k = 0; k < ev.size(); ++k) closest = std::min(closest, std::abs(ev[k] - lam.get_d()));
    EXPECT_LT(closest, 1e-9);
    // PSD iff both distinct Schur eigenvalues are nonnegative
    const bool psd = lam >= 0 && orthogonal_eigenvalue(ls) >= 0;
    EXPECT_EQ(linalg::psd_check(ls.zbar).is_psd, psd);
  }
}

TEST(AllOnesEigenvalue, RejectsNonPositiveSlack) {
  EXPECT_THROW(allones_eigenvalue_after_schur(build_zbar(10, 1, 0)), std::domain_error);
  EXPECT_THROW(allones_eigenvalue_closed_form(10, 1, 0), std::domain_error);
}

TEST(Lasserre1, IntegralDistributionIsNotRefuted) {
  const auto c = lasserre1_check(6, 1, 1);
  EXPECT_TRUE(c.zbar_verdict.is_psd);
  ASSERT_TRUE(c.full_verdict);
  EXPECT_TRUE(c.full_verdict->is_psd);
  EXPECT_FALSE(c.refuted);
}

TEST(Lasserre1, SmallCliquesRefutedByZbar) {
  for (auto [n, r, t] : std::vector<std::array<int, 3>>{{8, 1, 1}, {10, 1, 1}, {20, 2, 1}}) {
    const auto c = lasserre1_refutes(n, r, t);
    EXPECT_TRUE(c.refuted);
    EXPECT_EQ(c.refuted_by, "zbar");
    ASSERT_TRUE(c.allones_eigenvalue);
    EXPECT_LT(*c.allones_eigenvalue, 0);
    const auto ls = build_zbar(n, t, c.p);
    EXPECT_TRUE(linalg::verdict_consistent(ls.zbar, c.zbar_verdict));
    EXPECT_LT(oracle::min_eigenvalue(ls.zbar), 0);
  }
}

TEST(Lasserre1, PsdMinorEscalatesToFullDemandSlack) {
  const auto c = lasserre1_refutes(12, 2, 1);
  EXPECT_EQ(c.p, make_rational(1, 28));
  EXPECT_TRUE(c.zbar_verdict.is_psd);
  ASSERT_TRUE(c.full_verdict);
  EXPECT_FALSE(c.full_verdict->is_psd);
  EXPECT_TRUE(c.refuted);
  EXPECT_EQ(c.refuted_by, "full-demand-slack");

  const moments::MomentVector mv(moments::DistParams(instances::make_clique(12), c.p));
  const auto full = slack_matrix(mv, demand(mv, 1));
  EXPECT_TRUE(linalg::verdict_consistent(full, *c.full_verdict));
  EXPECT_LT(oracle::min_eigenvalue(full), 0);
}

TEST(Lasserre1, PreconditionIsEnforced) {
  EXPECT_THROW(lasserre1_refutes(5, 1, 1), std::invalid_argument);
  EXPECT_THROW(lasserre1_refutes(10, -1, 1), std::invalid_argument);
}

TEST(SlackMatrix, MomentRouteMatchesExhaustiveForEveryConstraint) {
  const Rational p = make_rational(2, 9);
  const moments::MomentVector mv(moments::DistParams(instances::make_clique(5), p));
  auto constraints = instances::pvc_constraints(mv.graph(), 3);
  constraints.push_back(demand(mv, make_rational(7, 2)));
  for (const auto& c : constraints) {
    ASSERT_EQ(slack_matrix(mv, c), slack_matrix_exhaustive(mv, c)) << c.name;
  }
}

TEST(SlackMatrix, EdgeAndBoxSlacksArePsdOnSmallClique) {
  const Rational p = make_rational(1, 3);
  const moments::MomentVector mv(moments::DistParams(instances::make_clique(6), p));
  for (const auto& c : instances::pvc_constraints(mv.graph(), 1)) {
    if (c.kind == instances::PvcConstraint::Kind::demand) continue;
    ASSERT_TRUE(linalg::psd_check(slack_matrix_exhaustive(mv, c)).is_psd) << c.name;
  }
}
