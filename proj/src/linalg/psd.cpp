#include "pvclift/linalg/psd.hpp"

#include <stdexcept>
#include <string>

namespace pvclift::linalg {

namespace {

// Back-substitution with the unit upper triangular L^T; only the first
// `cols` columns of L are populated.
std::vector<Rational> solve_lt(const std::vector<std::vector<Rational>>& lower, std::size_t cols,
                               std::vector<Rational> u) {
  const std::size_t n = u.size();
  for (std::size_t i = cols; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (lower[j][i] != 0 && u[j] != 0) u[i] -= lower[j][i] * u[j];
    }
  }
  return u;
}

// Looks for e_i, e_i - e_j or e_i + e_j with a negative quadratic form.
bool sparse_witness(const SymMatrix& m, std::vector<Rational>& v) {
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) < 0) {
      v.assign(n, Rational(0));
      v[i] = 1;
      return true;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational diag = m(i, i) + m(j, j);
      const Rational cross = 2 * m(i, j);
      if (diag - cross < 0 || diag + cross < 0) {
        v.assign(n, Rational(0));
        v[i] = 1;
        v[j] = diag - cross < 0 ? -1 : 1;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

PsdVerdict psd_check(const SymMatrix& m, Execution exec) {
  const std::size_t n = m.dim();
  // work[i][j] for j <= i holds the reduced matrix; columns < k hold L.
  std::vector<std::vector<Rational>> work(n);
  for (std::size_t i = 0; i < n; ++i) {
    work[i].resize(i + 1);
    for (std::size_t j = 0; j <= i; ++j) work[i][j] = m(i, j);
  }

  PsdVerdict verdict;
  verdict.pivots.reserve(n);
  auto fail = [&](std::size_t k, std::vector<Rational> u) {
    verdict.is_psd = false;
    verdict.failed_at = k;
    if (!sparse_witness(m, verdict.witness)) verdict.witness = solve_lt(work, k, std::move(u));
    verdict.witness_value = m.quadratic_form(verdict.witness);
    if (verdict.witness_value >= 0) {
      throw std::logic_error("psd_check: witness does not certify a negative value");
    }
    return verdict;
  };

  for (std::size_t k = 0; k < n; ++k) {
    const Rational d = work[k][k];
    if (d < 0) {
      std::vector<Rational> u(n);
      u[k] = 1;
      return fail(k, std::move(u));
    }
    if (d == 0) {
      for (std::size_t j = k + 1; j < n; ++j) {
        if (work[j][k] != 0) {
          // u = a e_k + e_j gives u^T S u = 2 a S_jk + S_jj = -1
          std::vector<Rational> u(n);
          u[k] = -(work[j][j] + 1) / (2 * work[j][k]);
          u[j] = 1;
          return fail(k, std::move(u));
        }
      }
      verdict.pivots.push_back(d);
      continue;
    }
    verdict.pivots.push_back(d);

    std::vector<Rational> col(n);
    for (std::size_t i = k + 1; i < n; ++i) col[i] = work[i][k];
#pragma omp parallel for schedule(dynamic, 4) if (exec == Execution::parallel && n - k > 48)
    for (std::size_t i = k + 1; i < n; ++i) {
      if (col[i] == 0) continue;
      const Rational factor = col[i] / d;
      for (std::size_t j = k + 1; j <= i; ++j) {
        if (col[j] != 0) work[i][j] -= factor * col[j];
      }
      work[i][k] = factor;
    }
  }
  return verdict;
}

bool verdict_consistent(const SymMatrix& m, const PsdVerdict& verdict) {
  if (verdict.is_psd) {
    if (verdict.pivots.size() != m.dim()) return false;
    for (const auto& d : verdict.pivots) {
      if (d < 0) return false;
    }
    return true;
  }
  if (verdict.witness.size() != m.dim()) return false;
  return verdict.witness_value < 0 && m.quadratic_form(verdict.witness) == verdict.witness_value;
}

SymMatrix schur_complement(const SymMatrix& m, std::size_t pivot_index) {
  if (pivot_index >= m.dim()) throw std::out_of_range("schur_complement: pivot index out of range");
  const Rational& pivot = m(pivot_index, pivot_index);
  if (pivot <= 0) {
    throw std::domain_error("schur_complement: pivot entry must be positive, got " + to_string(pivot));
  }
  std::vector<std::size_t> rest;
  rest.reserve(m.dim() - 1);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (i != pivot_index) rest.push_back(i);
  }
  SymMatrix out(rest.size());
  for (std::size_t a = 0; a < rest.size(); ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      out(a, b) = m(rest[a], rest[b]) - m(rest[a], pivot_index) * m(pivot_index, rest[b]) / pivot;
    }
  }
  return out;
}

}  // namespace pvclift::linalg
