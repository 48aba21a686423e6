#pragma once

#include <cstddef>
#include <vector>

#include "pvclift/linalg/rational.hpp"
#include "pvclift/linalg/sym_matrix.hpp"
#include "pvclift/parallel.hpp"

namespace pvclift::linalg {

/// Outcome of an exact PSD test.
///
/// When the matrix is PSD, `pivots` holds the full diagonal of its LDL^T
/// factorization (all >= 0). Otherwise `pivots` holds the pivots accepted
/// before the failure, `failed_at` is the elimination step that failed, and
/// `witness` is a rational vector v with v^T M v == `witness_value` < 0.
/// A witness of the form e_i or e_i +- e_j is reported when one exists;
/// otherwise it is the failing LDL^T direction mapped back through L^-T.
struct PsdVerdict {
  bool is_psd = true;
  std::vector<Rational> pivots;
  std::size_t failed_at = 0;
  std::vector<Rational> witness;
  Rational witness_value;
};

/// LDL^T without pivoting. A zero pivot is admissible only if the rest of
/// its column in the reduced matrix is zero.
PsdVerdict psd_check(const SymMatrix& m, Execution exec = Execution::parallel);

/// True if the verdict is internally consistent with m: a PSD verdict has
/// nonnegative pivots, a negative one a witness reproducing its value.
bool verdict_consistent(const SymMatrix& m, const PsdVerdict& verdict);

/// M'(i,j) = m(i,j) - m(i,p) m(p,j) / m(p,p) over the indices other than p,
/// in their original order. Throws std::domain_error unless m(p,p) > 0.
SymMatrix schur_complement(const SymMatrix& m, std::size_t pivot_index);

}  // namespace pvclift::linalg
