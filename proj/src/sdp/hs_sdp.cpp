#include "pvclift/sdp/hs_sdp.hpp"

#include <stdexcept>

#include "pvclift/instances/pvc.hpp"

namespace pvclift::sdp {

GramSolution build_star_sdp_solution(int n, int t) {
  if (t < 1 || 2 * t > n) {
    throw std::invalid_argument("star SDP solution needs 1 <= t <= n/2, got n=" + std::to_string(n) +
                                " t=" + std::to_string(t));
  }
  const Rational shift = linalg::make_rational(2 * t, n);
  const std::size_t center = static_cast<std::size_t>(n) + 1;
  SymMatrix g(center + 1);
  for (std::size_t a = 0; a <= center; ++a) g(a, a) = 1;
  for (std::size_t i = 1; i < center; ++i) {
    g(i, 0) = -1;
    g(center, i) = 1 - shift;
    for (std::size_t j = 1; j < i; ++j) g(i, j) = 1;
  }
  g(center, 0) = -1 + shift;
  return {std::move(g), instances::make_star(n), t};
}

GramSolution integral_gram_solution(const Graph& g, int t, const std::vector<int>& cover) {
  const int n = g.num_vertices();
  std::vector<int> sign(static_cast<std::size_t>(n) + 1, -1);
  sign[0] = 1;
  for (int v : cover) {
    if (v < 1 || v > n) throw std::invalid_argument("cover vertex out of range: " + std::to_string(v));
    sign[v] = 1;
  }
  SymMatrix gram(static_cast<std::size_t>(n) + 1);
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= a; ++b) gram(a, b) = sign[a] * sign[b];
  }
  return {std::move(gram), g, t};
}

std::vector<SdpConstraintValue> evaluate_constraints(const GramSolution& sol) {
  const auto& g = sol.gram;
  const int n = sol.graph.num_vertices();
  if (g.dim() != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("gram has dimension " + std::to_string(g.dim()) + ", graph needs " +
                                std::to_string(n + 1));
  }
  std::vector<SdpConstraintValue> out;
  for (int a = 0; a <= n; ++a) {
    out.push_back({"unit v" + std::to_string(a), g(a, a), g(a, a) == 1 ? Rational(0) : Rational(-1)});
  }
  for (const auto& [i, j] : sol.graph.edges()) {
    Rational lhs = g(0, i) + g(0, j) - g(i, j);
    Rational slack = 1 - lhs;
    out.push_back({"edge upper e" + std::to_string(i) + "-" + std::to_string(j), std::move(lhs), std::move(slack)});
  }
  for (const auto& [i, j] : sol.graph.edges()) {
    Rational lhs = g(0, i) + g(0, j) + g(i, j);
    Rational slack = lhs + 1;
    out.push_back({"edge lower e" + std::to_string(i) + "-" + std::to_string(j), std::move(lhs), std::move(slack)});
  }
  Rational demand;
  for (const auto& [i, j] : sol.graph.edges()) demand += 3 + g(0, i) + g(0, j) - g(i, j);
  Rational slack = demand - 4 * sol.t;
  out.push_back({"demand", std::move(demand), std::move(slack)});
  return out;
}

SdpVerdict verify_hs_sdp(const GramSolution& sol, const SdpVerifyOptions& options) {
  SdpVerdict v;
  const auto values = evaluate_constraints(sol);
  const int n = sol.graph.num_vertices();
  const std::size_t m = sol.graph.num_edges();

  v.psd = linalg::psd_check(sol.gram, options.execution);
  v.gram_psd = v.psd.is_psd;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k].slack < 0) {
      v.violated = values[k];
      v.constraints_checked = k + 1;
      break;
    }
  }
  if (!v.violated) v.constraints_checked = values.size();
  v.feasible = v.gram_psd && !v.violated;

  const std::size_t first_edge = static_cast<std::size_t>(n) + 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (k == 0 || values[first_edge + k].slack < v.min_edge_slack) v.min_edge_slack = values[first_edge + k].slack;
  }
  v.demand_lhs = values.back().lhs;

  for (int i = 1; i <= n; ++i) v.objective_value += sol.graph.weight(i) * (1 + sol.gram(0, i));
  v.objective_value /= 2;

  if (options.integral_opt) {
    v.integral_opt = options.integral_opt;
  } else if (n <= 24 && static_cast<std::size_t>(sol.t) <= m && sol.t >= 0) {
    v.integral_opt = instances::brute_force_cover(sol.graph, sol.t, options.execution).value;
  }
  if (v.integral_opt && v.objective_value > 0) v.integrality_gap_lower_bound = *v.integral_opt / v.objective_value;
  return v;
}

}  // namespace pvclift::sdp
