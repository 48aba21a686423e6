#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pvclift/instances/graph.hpp"
#include "pvclift/linalg/psd.hpp"
#include "pvclift/linalg/sym_matrix.hpp"
#include "pvclift/parallel.hpp"

namespace pvclift::sdp {

using instances::Graph;
using linalg::Rational;
using linalg::SymMatrix;

/// A vector solution of the partial vertex cover SDP given only by its
/// inner products. Row/column 0 is v_0, row i is vertex i.
struct GramSolution {
  SymMatrix gram;
  Graph graph;
  int t = 0;
};

/// The fooling solution on the star with n leaves (center n+1):
/// v_0 = -v_i for every leaf, v_0 . v_{n+1} = -1 + 2t/n. Every inner product
/// is rational, so nothing irrational is ever formed.
/// Throws std::invalid_argument unless 1 <= t <= n/2.
GramSolution build_star_sdp_solution(int n, int t);

/// The one-dimensional solution of a vertex set: v_i = v_0 for chosen
/// vertices, -v_0 otherwise.
GramSolution integral_gram_solution(const Graph& g, int t, const std::vector<int>& cover);

/// One SDP constraint evaluated exactly; slack >= 0 means it holds.
struct SdpConstraintValue {
  std::string name;
  Rational lhs;
  Rational slack;
};

struct SdpVerdict {
  bool feasible = true;
  bool gram_psd = true;
  linalg::PsdVerdict psd;
  /// First constraint with negative slack, in the order unit norms, edge
  /// upper rows, edge lower rows, demand.
  std::optional<SdpConstraintValue> violated;
  std::size_t constraints_checked = 0;
  Rational min_edge_slack;  // over the edge upper rows
  Rational demand_lhs;      // sum over edges of (3 + v_0.v_i + v_0.v_j - v_i.v_j)
  Rational objective_value; // (1/2) sum_i w_i (1 + v_0.v_i)
  std::optional<Rational> integral_opt;
  std::optional<Rational> integrality_gap_lower_bound;
};

struct SdpVerifyOptions {
  Execution execution = Execution::parallel;
  /// Computed by brute force when unset and n <= 24.
  std::optional<Rational> integral_opt;
};

/// Checks realizability (gram PSD) and every constraint in inner-product
/// form: unit norms, v_0.v_i + v_0.v_j - v_i.v_j <= 1 and
/// v_0.v_i + v_0.v_j + v_i.v_j >= -1 per edge, and the demand row >= 4t.
/// Throws std::invalid_argument when the gram size does not match the graph.
SdpVerdict verify_hs_sdp(const GramSolution& sol, const SdpVerifyOptions& options = {});

/// All constraint values in the same order verify_hs_sdp checks them.
std::vector<SdpConstraintValue> evaluate_constraints(const GramSolution& sol);

}  // namespace pvclift::sdp
