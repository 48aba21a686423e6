#pragma once

#include <vector>

#include "pvclift/instances/graph.hpp"
#include "pvclift/instances/var_set.hpp"
#include "pvclift/linalg/simplex.hpp"
#include "pvclift/parallel.hpp"

namespace pvclift::instances {

/// One linear constraint of P_t(G) over the variables V u E, in the form
/// sum coeff * x_q >= rhs. Every constraint of the polytope is written this
/// way (the upper bound x_q <= 1 as -x_q >= -1), so homogenizing it is just
/// moving rhs onto x_empty.
struct PvcConstraint {
  enum class Kind { edge, demand, lower, upper };
  Kind kind;
  VarId subject = 0;  // the edge for `edge`, the variable for `lower`/`upper`
  std::vector<std::pair<VarId, Rational>> terms;
  Rational rhs;
  std::string name;
};

/// Constraints in the order edge rows (lexicographic), demand, lower
/// bounds, upper bounds; this order is also the order checks are reported in.
std::vector<PvcConstraint> pvc_constraints(const Graph& g, int t);

/// The t-PVC LP relaxation: min sum w_i x_i subject to the rows of
/// pvc_constraints. Variables follow the Universe layout. Throws
/// std::invalid_argument when t < 0 or t > |E|.
linalg::LinearProgram build_pvc_lp(const Graph& g, int t);

/// 0-1 vector over V u E for a vertex set: chosen vertices and every edge
/// they touch set to 1.
std::vector<Rational> integral_point(const Graph& g, const std::vector<int>& cover);

struct IntegralOptimum {
  Rational value;
  std::vector<int> cover;  // 1-based vertices, ascending
};

/// Exhaustive search over all 2^n vertex subsets for the cheapest one
/// touching at least t edges. Ties go to the subset with the smallest
/// bitmask (vertex 1 is bit 0). Throws std::invalid_argument when n > 24,
/// t < 0 or t > |E|.
IntegralOptimum brute_force_cover(const Graph& g, int t, Execution exec = Execution::parallel);

inline Rational brute_force_opt(const Graph& g, int t) { return brute_force_cover(g, t).value; }

}  // namespace pvclift::instances
