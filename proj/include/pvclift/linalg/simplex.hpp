#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pvclift/linalg/rational.hpp"
#include "pvclift/parallel.hpp"

namespace pvclift::linalg {

enum class Sense { ge, le, eq };
enum class Direction { minimize, maximize };
enum class LpStatus { optimal, infeasible, unbounded };

std::string to_string(Sense s);
std::string to_string(LpStatus s);

struct LpRow {
  std::vector<Rational> coeffs;
  Sense sense = Sense::ge;
  Rational rhs;
  std::string name;
};

/// A linear program over nonnegative variables:
///   min/max  c^T x   s.t.  a_i^T x (>=|<=|=) b_i,  x >= 0.
/// Every row has exactly one coefficient per variable.
class LinearProgram {
 public:
  LinearProgram() = default;
  explicit LinearProgram(std::vector<std::string> variable_names,
                         Direction direction = Direction::minimize);

  std::size_t add_variable(std::string name);
  void add_row(std::vector<Rational> coeffs, Sense sense, Rational rhs, std::string name = {});
  void set_objective(std::vector<Rational> objective);
  void set_direction(Direction d) { direction_ = d; }

  std::size_t num_variables() const { return names_.size(); }
  std::size_t num_rows() const { return rows_.size(); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const std::vector<LpRow>& rows() const { return rows_; }
  const std::vector<Rational>& objective() const { return objective_; }
  Direction direction() const { return direction_; }

  /// Objective value of x (no feasibility check).
  Rational evaluate(const std::vector<Rational>& x) const;

  /// Exact feasibility of x, including x >= 0.
  bool is_feasible(const std::vector<Rational>& x) const;

 private:
  std::vector<std::string> names_;
  std::vector<LpRow> rows_;
  std::vector<Rational> objective_;
  Direction direction_ = Direction::minimize;
};

/// Solver output.
///
/// optimal:    `primal` is an optimal vertex, `dual` has one multiplier per
///             row and proves optimality (b^T y equals the optimum).
/// infeasible: `dual` is a Farkas multiplier: A^T y <= 0, b^T y > 0 with the
///             row-sense sign pattern of a minimization dual.
/// unbounded:  `primal` is a feasible point and `ray` a direction along which
///             the objective improves without bound.
struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
  std::vector<Rational> ray;
  std::size_t pivots = 0;
};

struct SimplexOptions {
  Execution execution = Execution::parallel;
  std::size_t max_pivots = 2'000'000;
};

/// Two-phase dense-tableau simplex with Bland's rule. Exact and
/// deterministic; the result always passes check_certificate.
LpResult lp_solve(const LinearProgram& lp, const SimplexOptions& options = {});

/// Independently re-checks every claim the result makes about lp.
bool check_certificate(const LinearProgram& lp, const LpResult& result);

}  // namespace pvclift::linalg
