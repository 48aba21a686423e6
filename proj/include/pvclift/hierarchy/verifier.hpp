#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pvclift/instances/pvc.hpp"
#include "pvclift/linalg/psd.hpp"
#include "pvclift/linalg/simplex.hpp"
#include "pvclift/moments/moment_vector.hpp"
#include "pvclift/parallel.hpp"

namespace pvclift::hierarchy {

using instances::Graph;
using instances::VarSet;
using linalg::Rational;
using moments::DistParams;
using moments::MomentVector;

/// A pair (Y, N) of disjoint variable sets, the multiplier
/// prod_{Y} x_i prod_{N} (1 - x_j) of a lifted constraint.
struct YnPair {
  VarSet y;
  VarSet n;

  friend bool operator==(const YnPair&, const YnPair&) = default;
};

/// All disjoint pairs with |Y u N| <= max_size, ordered by |Y u N|, then the
/// union in canonical order, then the Y-membership bitmask over the union's
/// ids ascending.
std::vector<YnPair> enumerate_pairs(std::size_t universe_size, int max_size);

/// FNV-1a over the enumeration (pairs and constraint names), so a
/// certificate pins down exactly what was checked and in which order.
std::uint64_t enumeration_fingerprint(const std::vector<YnPair>& pairs,
                                      const std::vector<std::string>& constraint_names);

/// A lifted constraint that failed: lhs >= rhs does not hold.
struct Violation {
  std::string constraint;
  YnPair pair;
  Rational lhs;
  Rational rhs;
  std::size_t pair_index = 0;
  std::size_t constraint_index = 0;
};

/// A conditional moment matrix that failed the PSD test.
struct PsdFailure {
  YnPair pair;
  std::size_t pair_index = 0;
  linalg::PsdVerdict verdict;
};

struct SaVerdict {
  bool feasible = true;
  std::optional<Violation> violated;
  std::optional<PsdFailure> psd_failure;
  std::size_t pairs_checked = 0;
  std::size_t constraints_checked = 0;
  std::size_t psd_checks = 0;
  Rational objective_value;  // sum_i w_i y_{i}
  std::optional<Rational> integral_opt;
  std::optional<Rational> integrality_gap_lower_bound;  // integral_opt / objective_value
  std::uint64_t fingerprint = 0;
};

struct VerifyOptions {
  Execution execution = Execution::parallel;
  /// Integral optimum for the gap bound; computed by brute force when unset
  /// and the graph has at most 24 vertices.
  std::optional<Rational> integral_opt;
};

/// Level-r Sherali-Adams membership of the moment vector. For every disjoint
/// (Y, N) with |Y u N| <= r and every constraint a.x >= b of P_t(G), checks
/// sum_q a_q w_{Y u {q}, N} >= b w_{Y, N}. Reports the first violation in
/// enumeration order. Throws std::invalid_argument for r < 0.
SaVerdict verify_sa(const MomentVector& mv, int t, int r, const VerifyOptions& options = {});
SaVerdict verify_sa(const Graph& g, int t, int r, const DistParams& params, const VerifyOptions& options = {});

/// verify_sa plus the PSD test of X^{empty,empty}, the P_1 principal minor of
/// the moment matrix.
SaVerdict verify_sap(const MomentVector& mv, int t, int r, const VerifyOptions& options = {});
SaVerdict verify_sap(const Graph& g, int t, int r, const DistParams& params, const VerifyOptions& options = {});

struct XynOptions : VerifyOptions {
  /// Check a seeded uniform sample of this many pairs instead of all of them.
  std::optional<std::size_t> sample;
  std::uint64_t seed = 1;
};

/// PSD test of X^{Y,N} for every (or a sampled set of) disjoint (Y, N) with
/// |Y u N| <= r - 1.
SaVerdict verify_xyn_family(const MomentVector& mv, int t, int r, const XynOptions& options = {});
SaVerdict verify_xyn_family(const Graph& g, int t, int r, const DistParams& params,
                            const XynOptions& options = {});

/// Deterministic sample of k distinct indices from [0, n), returned sorted.
/// Uses splitmix64 so the choice is identical across platforms.
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, std::uint64_t seed);

/// The level-1 Sherali-Adams LP of P_t(G) written out explicitly: one
/// variable y_A per A subset of V u E with |A| <= 2, the rows of every
/// constraint multiplied by x_q and by (1 - x_q) for each q, and y_empty = 1.
/// Minimizes sum_i w_i y_{i}. Throws std::invalid_argument when the variable
/// count would exceed max_variables.
linalg::LinearProgram generate_sa1_lp(const Graph& g, int t, std::size_t max_variables = 5000);

}  // namespace pvclift::hierarchy
