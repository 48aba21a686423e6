#include "pvclift/instances/pvc.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>

namespace pvclift::instances {

namespace {

void check_demand(const Graph& g, int t) {
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  if (static_cast<std::size_t>(t) > g.num_edges()) {
    throw std::invalid_argument("t = " + std::to_string(t) + " exceeds |E| = " +
                                std::to_string(g.num_edges()) + "; no integral cover exists");
  }
}

}  // namespace

std::vector<PvcConstraint> pvc_constraints(const Graph& g, int t) {
  check_demand(g, t);
  Universe u(g);
  std::vector<PvcConstraint> out;
  out.reserve(g.num_edges() + 1 + 2 * u.size());
  for (const auto& [i, j] : g.edges()) {
    const VarId e = u.edge_id(i, j);
    out.push_back({PvcConstraint::Kind::edge, e,
                   {{u.vertex_id(i), Rational(1)}, {u.vertex_id(j), Rational(1)}, {e, Rational(-1)}},
                   Rational(0), "edge " + u.name(e)});
  }
  PvcConstraint demand{PvcConstraint::Kind::demand, 0, {}, Rational(t), "demand"};
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    demand.terms.emplace_back(static_cast<VarId>(g.num_vertices() + k), Rational(1));
  }
  out.push_back(std::move(demand));
  for (VarId q = 0; q < u.size(); ++q) {
    out.push_back({PvcConstraint::Kind::lower, q, {{q, Rational(1)}}, Rational(0), "lower " + u.name(q)});
  }
  for (VarId q = 0; q < u.size(); ++q) {
    out.push_back({PvcConstraint::Kind::upper, q, {{q, Rational(-1)}}, Rational(-1), "upper " + u.name(q)});
  }
  return out;
}

linalg::LinearProgram build_pvc_lp(const Graph& g, int t) {
  Universe u(g);
  std::vector<std::string> names;
  names.reserve(u.size());
  for (VarId q = 0; q < u.size(); ++q) names.push_back("x_" + u.name(q));
  linalg::LinearProgram lp(std::move(names), linalg::Direction::minimize);

  for (const auto& c : pvc_constraints(g, t)) {
    std::vector<Rational> row(u.size());
    for (const auto& [q, a] : c.terms) row[q] += a;
    lp.add_row(std::move(row), linalg::Sense::ge, c.rhs, c.name);
  }
  std::vector<Rational> obj(u.size());
  for (int i = 1; i <= g.num_vertices(); ++i) obj[u.vertex_id(i)] = g.weight(i);
  lp.set_objective(std::move(obj));
  return lp;
}

std::vector<Rational> integral_point(const Graph& g, const std::vector<int>& cover) {
  Universe u(g);
  std::vector<Rational> x(u.size());
  std::vector<bool> chosen(static_cast<std::size_t>(g.num_vertices()) + 1, false);
  for (int v : cover) {
    x[u.vertex_id(v)] = 1;
    chosen.at(v) = true;
  }
  for (const auto& [i, j] : g.edges()) {
    if (chosen[i] || chosen[j]) x[u.edge_id(i, j)] = 1;
  }
  return x;
}

namespace {

struct Best {
  std::optional<std::int64_t> cost;
  std::uint32_t mask = 0;

  void offer(std::int64_t c, std::uint32_t m) {
    if (!cost || c < *cost || (c == *cost && m < mask)) {
      cost = c;
      mask = m;
    }
  }
};

// Vertex weights over a common denominator, as int64 when every partial sum
// fits.
std::optional<std::vector<std::int64_t>> scaled_weights(const Graph& g, linalg::Integer& denom) {
  denom = 1;
  for (const auto& w : g.weights()) denom = lcm(denom, w.get_den());
  std::vector<std::int64_t> out;
  linalg::Integer abs_total = 0;
  for (const auto& w : g.weights()) {
    linalg::Integer s = w.get_num() * (denom / w.get_den());
    abs_total += abs(s);
    if (!s.fits_slong_p()) return std::nullopt;
    out.push_back(s.get_si());
  }
  if (!abs_total.fits_slong_p()) return std::nullopt;
  return out;
}

}  // namespace

IntegralOptimum brute_force_cover(const Graph& g, int t, Execution exec) {
  check_demand(g, t);
  const int n = g.num_vertices();
  if (n > 24) throw std::invalid_argument("brute force is limited to 24 vertices, got " + std::to_string(n));

  linalg::Integer denom;
  auto weights = scaled_weights(g, denom);
  if (!weights) throw std::invalid_argument("vertex weights too large for exhaustive search");

  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const auto& [i, j] : g.edges()) {
    adj[i - 1] |= 1u << (j - 1);
    adj[j - 1] |= 1u << (i - 1);
  }
  const std::int64_t m = static_cast<std::int64_t>(g.num_edges());
  const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
  const std::int64_t subsets = std::int64_t{1} << n;

  auto visit = [&](std::uint32_t mask, Best& best) {
    // edges with both endpoints outside the set are the uncovered ones
    std::int64_t uncovered2 = 0;
    const std::uint32_t outside = ~mask & full;
    std::int64_t cost = 0;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1u) {
        cost += (*weights)[v];
      } else {
        uncovered2 += std::popcount(adj[v] & outside);
      }
    }
    if (m - uncovered2 / 2 >= t) best.offer(cost, mask);
  };

  Best best;
  if (exec == Execution::serial) {
    for (std::int64_t s = 0; s < subsets; ++s) visit(static_cast<std::uint32_t>(s), best);
  } else {
#pragma omp parallel
    {
      Best local;
#pragma omp for schedule(static)
      for (std::int64_t s = 0; s < subsets; ++s) visit(static_cast<std::uint32_t>(s), local);
#pragma omp critical
      if (local.cost) best.offer(*local.cost, local.mask);
    }
  }

  IntegralOptimum out;
  out.value = linalg::make_rational(linalg::Integer(static_cast<long>(*best.cost)), denom);
  for (int v = 0; v < n; ++v) {
    if (best.mask >> v & 1u) out.cover.push_back(v + 1);
  }
  return out;
}

}  // namespace pvclift::instances
