#pragma once

#include <map>
#include <optional>
#include <string>

#include "pvclift/instances/pvc.hpp"
#include "pvclift/linalg/psd.hpp"
#include "pvclift/linalg/rational.hpp"
#include "pvclift/linalg/sym_matrix.hpp"
#include "pvclift/moments/moment_vector.hpp"
#include "pvclift/parallel.hpp"

namespace pvclift::lasserre {

using linalg::Integer;
using linalg::Rational;
using linalg::SymMatrix;

/// C_{n,a}: edges of K_n touched by a fixed set of a vertices,
/// binom(a,2) + a(n-a). Throws std::invalid_argument unless 0 <= a <= n.
Integer covered_edges(int n, int a);

/// S_n: expected slack of the demand row on K_n under D_p,
/// binom(n,2)(2p - p^2) - t.
Rational expected_slack(int n, const Rational& t, const Rational& p);

/// The demand-row slack matrix of the level-1 Lasserre relaxation on K_n,
/// restricted to rows and columns indexed by {empty} u {{i} : i in V}
/// (index 0 is the empty set, index i is vertex i).
struct LasserreSlack {
  int n = 0;
  Rational t;
  Rational p;
  SymMatrix zbar;
  std::map<int, Rational> s_values;               // k -> S_k for k = n-2, n-1, n
  std::map<std::pair<int, int>, Integer> c_values;  // (n, a) -> C_{n,a} for a = 0, 1, 2
};

/// Closed form: entry (I, J) = p^{|I u J|} (S_{n-|I u J|} + C_{n,|I u J|}).
/// Throws std::invalid_argument for n < 2.
LasserreSlack build_zbar(int n, const Rational& t, const Rational& p);

/// The same matrix by summing p^|A| (1-p)^{n-|A|} (C_{n,|A|} - t) y_A y_A^T
/// over all 2^n vertex subsets A. Throws std::invalid_argument for n > 20.
SymMatrix build_zbar_exhaustive(int n, const Rational& t, const Rational& p,
                                Execution exec = Execution::parallel);

/// Eigenvalue of the Schur complement of zbar at the (empty, empty) entry
/// along the all-ones vector: M_ii + (n-1) M_ij - n zbar_{0i}^2 / S_n.
/// Throws std::domain_error unless S_n > 0.
Rational allones_eigenvalue_after_schur(const LasserreSlack& ls);

/// Same quantity straight from S_k and C_{n,a}, without the matrix.
Rational allones_eigenvalue_closed_form(int n, const Rational& t, const Rational& p);

/// The Schur complement's eigenvalue on vectors orthogonal to all-ones
/// (multiplicity n-1): M_ii - M_ij.
Rational orthogonal_eigenvalue(const LasserreSlack& ls);

/// Level-1 Lasserre slack matrix of a constraint sum a_q x_q >= b, indexed by
/// P_1 over V u E: entry (A, B) = sum_q a_q y_{A u B u {q}} - b y_{A u B}.
SymMatrix slack_matrix(const moments::MomentVector& mv, const instances::PvcConstraint& c,
                       Execution exec = Execution::parallel);

/// The same matrix as the expectation over D_p of slack(x) x x^T, summed
/// over all 2^n vertex subsets. Throws std::invalid_argument for n > 20.
SymMatrix slack_matrix_exhaustive(const moments::MomentVector& mv, const instances::PvcConstraint& c);

/// Outcome of testing the level-1 Lasserre demand slack on K_n at a given p.
struct LasserreCheck {
  int n = 0;
  Rational t;
  Rational p;
  Rational s_n;
  std::optional<Rational> allones_eigenvalue;  // present when S_n > 0
  Rational orthogonal_eigenvalue;
  linalg::PsdVerdict zbar_verdict;
  /// Full P_1-indexed demand slack; only built when zbar is PSD.
  std::optional<linalg::PsdVerdict> full_verdict;
  bool refuted = false;
  std::string refuted_by;  // "zbar", "full-demand-slack" or empty
};

LasserreCheck lasserre1_check(int n, const Rational& t, const Rational& p,
                              Execution exec = Execution::parallel);

/// lasserre1_check at p = t / binom(n-2r, 2), the level-r Sherali-Adams
/// point. Throws std::invalid_argument unless n >= 2r + 2t + 2.
LasserreCheck lasserre1_refutes(int n, int r, int t, Execution exec = Execution::parallel);

}  // namespace pvclift::lasserre
