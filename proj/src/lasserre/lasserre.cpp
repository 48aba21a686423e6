#include "pvclift/lasserre/lasserre.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace pvclift::lasserre {

using instances::PvcConstraint;
using instances::VarId;
using instances::VarSet;
using linalg::binomial;
using linalg::power;

namespace {

// Largest P_1 dimension the full demand slack is built for.
constexpr std::size_t kFullSlackCap = 600;

void check_exhaustive_size(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("exhaustive summation needs 1 <= n <= 20");
}

// p^a (1-p)^(n-a) for a = 0..n
std::vector<Rational> subset_probabilities(int n, const Rational& p) {
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int a = 0; a <= n; ++a) out[a] = power(p, a) * power(1 - p, n - a);
  return out;
}

// Adds w to every entry (i, j) with i, j in `ones`.
void add_outer(SymMatrix& m, const std::vector<std::size_t>& ones, const Rational& w) {
  for (std::size_t a = 0; a < ones.size(); ++a) {
    for (std::size_t b = 0; b <= a; ++b) m(ones[a], ones[b]) += w;
  }
}

void add_into(SymMatrix& acc, const SymMatrix& part) {
  for (std::size_t i = 0; i < acc.dim(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) acc(i, j) += part(i, j);
  }
}

PvcConstraint demand_row(const moments::MomentVector& mv, const Rational& t) {
  PvcConstraint c{PvcConstraint::Kind::demand, 0, {}, t, "demand"};
  const auto& u = mv.universe();
  for (VarId id = static_cast<VarId>(u.num_vertices()); id < u.size(); ++id) c.terms.emplace_back(id, Rational(1));
  return c;
}

}  // namespace

Integer covered_edges(int n, int a) {
  if (a < 0 || a > n) throw std::invalid_argument("covered_edges needs 0 <= a <= n");
  return binomial(static_cast<unsigned long>(a), 2) + Integer(a) * Integer(n - a);
}

Rational expected_slack(int n, const Rational& t, const Rational& p) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  return Rational(binomial(static_cast<unsigned long>(n), 2)) * (2 * p - p * p) - t;
}

LasserreSlack build_zbar(int n, const Rational& t, const Rational& p) {
  if (n < 2) throw std::invalid_argument("zbar needs n >= 2");
  LasserreSlack ls;
  ls.n = n;
  ls.t = t;
  ls.p = p;
  for (int k = n - 2; k <= n; ++k) ls.s_values[k] = expected_slack(k, t, p);
  for (int a = 0; a <= 2; ++a) ls.c_values[{n, a}] = covered_edges(n, a);

  Rational by_size[3];
  for (int a = 0; a <= 2; ++a) {
    by_size[a] = power(p, a) * (ls.s_values[n - a] + Rational(ls.c_values[{n, a}]));
  }
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  ls.zbar = SymMatrix(dim);
  ls.zbar(0, 0) = by_size[0];
  for (std::size_t i = 1; i < dim; ++i) {
    ls.zbar(i, 0) = by_size[1];
    ls.zbar(i, i) = by_size[1];
    for (std::size_t j = 1; j < i; ++j) ls.zbar(i, j) = by_size[2];
  }
  return ls;
}

SymMatrix build_zbar_exhaustive(int n, const Rational& t, const Rational& p, Execution exec) {
  check_exhaustive_size(n);
  const auto prob = subset_probabilities(n, p);
  std::vector<Rational> weight(static_cast<std::size_t>(n) + 1);
  for (int a = 0; a <= n; ++a) weight[a] = prob[a] * (Rational(covered_edges(n, a)) - t);

  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  const std::uint32_t subsets = 1u << n;
  SymMatrix total(dim);
  auto accumulate = [&](SymMatrix& m, std::uint32_t mask) {
    std::vector<std::size_t> ones{0};
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) ones.push_back(static_cast<std::size_t>(i) + 1);
    }
    add_outer(m, ones, weight[std::popcount(mask)]);
  };

  if (exec == Execution::serial) {
    for (std::uint32_t mask = 0; mask < subsets; ++mask) accumulate(total, mask);
    return total;
  }
#pragma omp parallel
  {
    SymMatrix part(dim);
#pragma omp for schedule(static)
    for (std::uint32_t mask = 0; mask < subsets; ++mask) accumulate(part, mask);
#pragma omp critical(pvclift_zbar_reduce)
    add_into(total, part);
  }
  return total;
}

Rational allones_eigenvalue_after_schur(const LasserreSlack& ls) {
  const auto& z = ls.zbar;
  if (z.dim() < 3) throw std::invalid_argument("all-ones eigenvalue needs n >= 2");
  if (z(0, 0) <= 0) throw std::domain_error("Schur complement needs S_n > 0, got " + linalg::to_string(z(0, 0)));
  const Rational n = ls.n;
  return z(1, 1) + (n - 1) * z(2, 1) - n * z(1, 0) * z(1, 0) / z(0, 0);
}

Rational allones_eigenvalue_closed_form(int n, const Rational& t, const Rational& p) {
  if (n < 2) throw std::invalid_argument("all-ones eigenvalue needs n >= 2");
  const Rational s_n = expected_slack(n, t, p);
  if (s_n <= 0) throw std::domain_error("Schur complement needs S_n > 0, got " + linalg::to_string(s_n));
  const Rational a = p * (expected_slack(n - 1, t, p) + Rational(covered_edges(n, 1)));
  const Rational b = p * p * (expected_slack(n - 2, t, p) + Rational(covered_edges(n, 2)));
  return a + Rational(n - 1) * b - Rational(n) * a * a / s_n;
}

Rational orthogonal_eigenvalue(const LasserreSlack& ls) {
  if (ls.zbar.dim() < 3) throw std::invalid_argument("orthogonal eigenvalue needs n >= 2");
  return ls.zbar(1, 1) - ls.zbar(2, 1);
}

SymMatrix slack_matrix(const moments::MomentVector& mv, const PvcConstraint& c, Execution exec) {
  const auto idx = moments::p1_index(mv.universe());
  const std::size_t dim = idx.size();
  SymMatrix out(dim);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Execution::parallel)
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      const VarSet ab = idx[a].united(idx[b]);
      Rational v = -c.rhs * mv.value(ab);
      for (const auto& [q, coeff] : c.terms) v += coeff * mv.value(ab.with(q));
      out(a, b) = std::move(v);
    }
  }
  return out;
}

SymMatrix slack_matrix_exhaustive(const moments::MomentVector& mv, const PvcConstraint& c) {
  const int n = mv.graph().num_vertices();
  check_exhaustive_size(n);
  const auto& u = mv.universe();
  const std::size_t dim = u.size() + 1;

  // Scale the row to integers so each subset contributes an exact integer;
  // counts[k] collects subsets with k chosen vertices.
  Integer den = c.rhs.get_den();
  for (const auto& [q, coeff] : c.terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), coeff.get_den().get_mpz_t());
  std::vector<std::pair<VarId, Integer>> terms;
  for (const auto& [q, coeff] : c.terms) terms.emplace_back(q, Integer(coeff * den));
  const Integer rhs(c.rhs * den);

  std::vector<std::vector<Integer>> counts(static_cast<std::size_t>(n) + 1,
                                           std::vector<Integer>(dim * (dim + 1) / 2));
  std::vector<char> x(u.size());
  std::vector<std::size_t> ones;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    for (VarId id = 0; id < u.size(); ++id) {
      if (u.is_vertex(id)) {
        x[id] = mask >> id & 1u;
      } else {
        const auto& [i, j] = u.endpoints(id);
        x[id] = (mask >> (i - 1) & 1u) || (mask >> (j - 1) & 1u);
      }
    }
    Integer slack = -rhs;
    for (const auto& [q, coeff] : terms) {
      if (x[q]) slack += coeff;
    }
    if (slack == 0) continue;
    ones.assign(1, 0);
    for (VarId id = 0; id < u.size(); ++id) {
      if (x[id]) ones.push_back(std::size_t{1} + id);
    }
    auto& bucket = counts[std::popcount(mask)];
    for (std::size_t a = 0; a < ones.size(); ++a) {
      const std::size_t row = ones[a] * (ones[a] + 1) / 2;
      for (std::size_t b = 0; b <= a; ++b) bucket[row + ones[b]] += slack;
    }
  }

  const auto prob = subset_probabilities(n, mv.p());
  SymMatrix out(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      Rational v;
      for (int k = 0; k <= n; ++k) {
        const Integer& cnt = counts[k][a * (a + 1) / 2 + b];
        if (cnt != 0) v += prob[k] * Rational(cnt);
      }
      out(a, b) = v / Rational(den);
    }
  }
  return out;
}

LasserreCheck lasserre1_check(int n, const Rational& t, const Rational& p, Execution exec) {
  const LasserreSlack ls = build_zbar(n, t, p);
  LasserreCheck out;
  out.n = n;
  out.t = t;
  out.p = p;
  out.s_n = ls.zbar(0, 0);
  if (out.s_n > 0) out.allones_eigenvalue = allones_eigenvalue_after_schur(ls);
  out.orthogonal_eigenvalue = orthogonal_eigenvalue(ls);
  out.zbar_verdict = linalg::psd_check(ls.zbar, exec);
  if (!out.zbar_verdict.is_psd) {
    out.refuted = true;
    out.refuted_by = "zbar";
    return out;
  }

  const std::size_t dim = 1 + static_cast<std::size_t>(n) + static_cast<std::size_t>(n) * (n - 1) / 2;
  if (dim > kFullSlackCap) return out;
  const moments::MomentVector mv(moments::DistParams(instances::make_clique(n), p));
  out.full_verdict = linalg::psd_check(slack_matrix(mv, demand_row(mv, t), exec), exec);
  if (!out.full_verdict->is_psd) {
    out.refuted = true;
    out.refuted_by = "full-demand-slack";
  }
  return out;
}

LasserreCheck lasserre1_refutes(int n, int r, int t, Execution exec) {
  if (r < 0 || t < 0) throw std::invalid_argument("r and t must be nonnegative");
  if (n < 2 * r + 2 * t + 2) {
    throw std::invalid_argument("need n >= 2r + 2t + 2, got n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                " t=" + std::to_string(t));
  }
  const Rational p = linalg::make_rational(Integer(t), binomial(static_cast<unsigned long>(n - 2 * r), 2));
  return lasserre1_check(n, Rational(t), p, exec);
}

}  // namespace pvclift::lasserre
