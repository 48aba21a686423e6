#include "pvclift/linalg/simplex.hpp"

#include <limits>
#include <map>
#include <tuple>
#include <stdexcept>

namespace pvclift::linalg {

std::string to_string(Sense s) {
  switch (s) {
    case Sense::ge: return ">=";
    case Sense::le: return "<=";
    case Sense::eq: return "=";
  }
  return "?";
}

std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "?";
}

LinearProgram::LinearProgram(std::vector<std::string> variable_names, Direction direction)
    : names_(std::move(variable_names)), objective_(names_.size()), direction_(direction) {}

std::size_t LinearProgram::add_variable(std::string name) {
  if (!rows_.empty()) throw std::logic_error("add_variable after rows were added");
  names_.push_back(std::move(name));
  objective_.emplace_back(0);
  return names_.size() - 1;
}

void LinearProgram::add_row(std::vector<Rational> coeffs, Sense sense, Rational rhs, std::string name) {
  if (coeffs.size() != names_.size()) {
    throw std::invalid_argument("row '" + name + "' has " + std::to_string(coeffs.size()) +
                                " coefficients, expected " + std::to_string(names_.size()));
  }
  rows_.push_back(LpRow{std::move(coeffs), sense, std::move(rhs), std::move(name)});
}

void LinearProgram::set_objective(std::vector<Rational> objective) {
  if (objective.size() != names_.size()) throw std::invalid_argument("objective length mismatch");
  objective_ = std::move(objective);
}

Rational LinearProgram::evaluate(const std::vector<Rational>& x) const {
  Rational v;
  for (std::size_t j = 0; j < names_.size(); ++j) v += objective_[j] * x.at(j);
  return v;
}

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& x) {
  Rational v;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] != 0 && x[j] != 0) v += a[j] * x[j];
  }
  return v;
}

bool satisfies(const Rational& lhs, Sense sense, const Rational& rhs) {
  switch (sense) {
    case Sense::ge: return lhs >= rhs;
    case Sense::le: return lhs <= rhs;
    case Sense::eq: return lhs == rhs;
  }
  return false;
}

}  // namespace

bool LinearProgram::is_feasible(const std::vector<Rational>& x) const {
  if (x.size() != names_.size()) return false;
  for (const auto& v : x) {
    if (v < 0) return false;
  }
  for (const auto& row : rows_) {
    if (!satisfies(dot(row.coeffs, x), row.sense, row.rhs)) return false;
  }
  return true;
}

namespace {

// Dense tableau in the form  B^-1 A x = B^-1 b  with an attached reduced-cost
// row. Columns: structural variables, then one slack per inequality, then
// artificials.
class Tableau {
  // Coefficient of the row's slack: -1 surplus, +1 slack, 0 for equalities.
  static int sigma_of(const LpRow& r) { return r.sense == Sense::ge ? -1 : (r.sense == Sense::le ? 1 : 0); }
  // Rows are negated to make rhs >= 0; a zero-rhs inequality is negated
  // when that turns its slack into a feasible starting basic variable.
  static int flip_of(const LpRow& r) {
    if (r.rhs < 0) return -1;
    if (r.rhs == 0 && r.sense == Sense::ge) return -1;
    return 1;
  }

 public:
  Tableau(const LinearProgram& lp, const std::vector<Rational>& cost, Execution exec)
      : m_(lp.num_rows()), nvar_(lp.num_variables()), cost_(cost), exec_(exec) {
    const auto& rows = lp.rows();
    std::size_t nslack = 0;
    for (const auto& r : rows) nslack += r.sense != Sense::eq;
    std::size_t nart = 0;
    for (const auto& r : rows) nart += !(sigma_of(r) * flip_of(r) == 1);
    first_slack_ = nvar_;
    first_art_ = nvar_ + nslack;
    ncols_ = first_art_ + nart;

    t_.assign(m_, std::vector<Rational>(ncols_));
    rhs_.resize(m_);
    basis_.resize(m_);
    id_col_.resize(m_);
    flip_.resize(m_);
    slack_col_.assign(m_, npos);

    std::size_t next_slack = first_slack_;
    std::size_t next_art = first_art_;
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& r = rows[i];
      const int sigma = sigma_of(r);
      flip_[i] = flip_of(r);
      for (std::size_t j = 0; j < nvar_; ++j) {
        if (r.coeffs[j] != 0) t_[i][j] = flip_[i] * r.coeffs[j];
      }
      rhs_[i] = flip_[i] * r.rhs;
      if (sigma != 0) {
        slack_col_[i] = next_slack++;
        t_[i][slack_col_[i]] = sigma * flip_[i];
      }
      if (sigma * flip_[i] == 1) {
        basis_[i] = slack_col_[i];
      } else {
        basis_[i] = next_art;
        t_[i][next_art++] = 1;
      }
      id_col_[i] = basis_[i];
    }
    red_.resize(ncols_);
  }

  bool is_artificial(std::size_t col) const { return col >= first_art_; }

  void load_phase1_costs() {
    phase_cost_.assign(ncols_, Rational(0));
    for (std::size_t k = first_art_; k < ncols_; ++k) phase_cost_[k] = 1;
    load_costs();
  }

  void load_phase2_costs() {
    phase_cost_.assign(ncols_, Rational(0));
    for (std::size_t j = 0; j < nvar_; ++j) phase_cost_[j] = cost_[j];
    load_costs();
  }

  // Returns false if the phase is unbounded (entering column recorded).
  bool optimize(bool allow_artificial, std::size_t& pivots, std::size_t max_pivots) {
    for (;;) {
      std::size_t enter = npos;
      for (std::size_t k = 0; k < ncols_; ++k) {
        if (!allow_artificial && is_artificial(k)) continue;
        if (red_[k] < 0) {
          enter = k;
          break;
        }
      }
      if (enter == npos) return true;

      std::size_t leave = npos;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = rhs_[i] / t_[i][enter];
        if (leave == npos || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == npos) {
        unbounded_col_ = enter;
        return false;
      }
      pivot(leave, enter);
      if (++pivots > max_pivots) throw std::runtime_error("simplex exceeded the pivot limit");
    }
  }

  // Pivots basic artificials out wherever a structural or slack column allows.
  void drive_out_artificials(std::size_t& pivots) {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (std::size_t k = 0; k < first_art_; ++k) {
        if (t_[i][k] != 0) {
          pivot(i, k);
          ++pivots;
          break;
        }
      }
    }
  }

  Rational objective() const { return -red_rhs_; }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(nvar_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < nvar_) x[basis_[i]] = rhs_[i];
    }
    return x;
  }

  // Row multipliers of the current phase, mapped back to the unflipped rows.
  std::vector<Rational> duals() const {
    std::vector<Rational> y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t c = id_col_[i];
      y[i] = (phase_cost_[c] - red_[c]) * flip_[i];
    }
    return y;
  }

  std::vector<Rational> ray() const {
    std::vector<Rational> d(nvar_);
    if (unbounded_col_ < nvar_) d[unbounded_col_] = 1;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < nvar_) d[basis_[i]] = -t_[i][unbounded_col_];
    }
    return d;
  }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  void load_costs() {
    for (std::size_t k = 0; k < ncols_; ++k) red_[k] = phase_cost_[k];
    red_rhs_ = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = phase_cost_[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t k = 0; k < ncols_; ++k) {
        if (t_[i][k] != 0) red_[k] -= cb * t_[i][k];
      }
      red_rhs_ -= cb * rhs_[i];
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    auto& prow = t_[r];
    const Rational piv = prow[col];
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k < ncols_; ++k) {
      if (prow[k] != 0) {
        prow[k] /= piv;
        nz.push_back(k);
      }
    }
    rhs_[r] /= piv;

#pragma omp parallel for schedule(dynamic, 16) if (exec_ == Execution::parallel && m_ > 256)
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || t_[i][col] == 0) continue;
      const Rational f = t_[i][col];
      auto& row = t_[i];
      for (std::size_t k : nz) row[k] -= f * prow[k];
      if (rhs_[r] != 0) rhs_[i] -= f * rhs_[r];
    }
    if (red_[col] != 0) {
      const Rational f = red_[col];
      for (std::size_t k : nz) red_[k] -= f * prow[k];
      red_rhs_ -= f * rhs_[r];
    }
    basis_[r] = col;
  }

  std::size_t m_;
  std::size_t nvar_;
  std::size_t ncols_ = 0;
  std::size_t first_slack_ = 0;
  std::size_t first_art_ = 0;
  std::vector<Rational> cost_;
  Execution exec_;

  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> id_col_;
  std::vector<std::size_t> slack_col_;
  std::vector<int> flip_;
  std::vector<Rational> phase_cost_;
  std::vector<Rational> red_;
  Rational red_rhs_;
  std::size_t unbounded_col_ = npos;
};

}  // namespace

namespace {

// Rows that x >= 0 already implies, and exact repeats of earlier rows, are
// left out of the tableau; their multipliers are 0 in every certificate.
std::vector<std::size_t> essential_rows(const LinearProgram& lp) {
  using Key = std::tuple<Sense, Rational, std::vector<std::pair<std::size_t, Rational>>>;
  std::map<Key, std::size_t> seen;
  std::vector<std::size_t> keep;
  const auto& rows = lp.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    std::vector<std::pair<std::size_t, Rational>> sparse;
    bool all_nonneg = true;
    bool all_nonpos = true;
    for (std::size_t j = 0; j < r.coeffs.size(); ++j) {
      if (r.coeffs[j] == 0) continue;
      sparse.emplace_back(j, r.coeffs[j]);
      all_nonneg = all_nonneg && r.coeffs[j] > 0;
      all_nonpos = all_nonpos && r.coeffs[j] < 0;
    }
    if (r.sense == Sense::ge && r.rhs <= 0 && all_nonneg) continue;
    if (r.sense == Sense::le && r.rhs >= 0 && all_nonpos) continue;
    if (!seen.emplace(Key{r.sense, r.rhs, std::move(sparse)}, i).second) continue;
    keep.push_back(i);
  }
  return keep;
}

LpResult solve_tableau(const LinearProgram& lp, const SimplexOptions& options) {
  const bool maximize = lp.direction() == Direction::maximize;
  std::vector<Rational> cost = lp.objective();
  if (maximize) {
    for (auto& c : cost) c = -c;
  }

  Tableau tab(lp, cost, options.execution);
  LpResult result;

  tab.load_phase1_costs();
  tab.optimize(true, result.pivots, options.max_pivots);
  if (tab.objective() > 0) {
    result.status = LpStatus::infeasible;
    result.dual = tab.duals();
    if (!check_certificate(lp, result)) throw std::logic_error("lp_solve: invalid Farkas certificate");
    return result;
  }
  tab.drive_out_artificials(result.pivots);

  tab.load_phase2_costs();
  const bool bounded = tab.optimize(false, result.pivots, options.max_pivots);
  result.primal = tab.primal();
  if (!bounded) {
    result.status = LpStatus::unbounded;
    result.ray = tab.ray();
    result.value = lp.evaluate(result.primal);
  } else {
    result.status = LpStatus::optimal;
    result.value = maximize ? Rational(-tab.objective()) : tab.objective();
    result.dual = tab.duals();
    if (maximize) {
      for (auto& y : result.dual) y = -y;
    }
  }
  return result;
}

}  // namespace

LpResult lp_solve(const LinearProgram& lp, const SimplexOptions& options) {
  const auto keep = essential_rows(lp);
  LpResult result;
  if (keep.size() == lp.num_rows()) {
    result = solve_tableau(lp, options);
  } else {
    LinearProgram reduced(lp.variable_names(), lp.direction());
    for (std::size_t i : keep) {
      const auto& r = lp.rows()[i];
      reduced.add_row(r.coeffs, r.sense, r.rhs, r.name);
    }
    reduced.set_objective(lp.objective());
    result = solve_tableau(reduced, options);
    if (!result.dual.empty()) {
      std::vector<Rational> dual(lp.num_rows());
      for (std::size_t k = 0; k < keep.size(); ++k) dual[keep[k]] = std::move(result.dual[k]);
      result.dual = std::move(dual);
    }
  }
  if (!check_certificate(lp, result)) throw std::logic_error("lp_solve: certificate check failed");
  return result;
}

bool check_certificate(const LinearProgram& lp, const LpResult& result) {
  const std::size_t n = lp.num_variables();
  const auto& rows = lp.rows();
  // Everything is checked in minimization form; a maximization flips the
  // objective and the sign of the multipliers.
  const int dir = lp.direction() == Direction::maximize ? -1 : 1;

  auto dual_signs_ok = [&](const std::vector<Rational>& y) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational yi = dir * y[i];
      if (rows[i].sense == Sense::ge && yi < 0) return false;
      if (rows[i].sense == Sense::le && yi > 0) return false;
    }
    return true;
  };
  auto at_y = [&](const std::vector<Rational>& y) {
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (y[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (rows[i].coeffs[j] != 0) out[j] += rows[i].coeffs[j] * y[i];
      }
    }
    return out;
  };
  auto bty = [&](const std::vector<Rational>& y) {
    Rational v;
    for (std::size_t i = 0; i < rows.size(); ++i) v += rows[i].rhs * y[i];
    return v;
  };

  switch (result.status) {
    case LpStatus::optimal: {
      if (!lp.is_feasible(result.primal) || result.dual.size() != rows.size()) return false;
      if (lp.evaluate(result.primal) != result.value) return false;
      if (!dual_signs_ok(result.dual)) return false;
      const auto aty = at_y(result.dual);
      for (std::size_t j = 0; j < n; ++j) {
        if (dir * aty[j] > dir * lp.objective()[j]) return false;
      }
      return bty(result.dual) == result.value;
    }
    case LpStatus::infeasible: {
      if (result.dual.size() != rows.size()) return false;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].sense == Sense::ge && result.dual[i] < 0) return false;
        if (rows[i].sense == Sense::le && result.dual[i] > 0) return false;
      }
      const auto aty = at_y(result.dual);
      for (const auto& v : aty) {
        if (v > 0) return false;
      }
      return bty(result.dual) > 0;
    }
    case LpStatus::unbounded: {
      if (!lp.is_feasible(result.primal) || result.ray.size() != n) return false;
      bool nonzero = false;
      for (const auto& d : result.ray) {
        if (d < 0) return false;
        nonzero |= d != 0;
      }
      if (!nonzero) return false;
      for (const auto& row : rows) {
        const Rational ad = dot(row.coeffs, result.ray);
        if (!satisfies(ad, row.sense, Rational(0))) return false;
      }
      return dir * lp.evaluate(result.ray) < 0;
    }
  }
  return false;
}

}  // namespace pvclift::linalg
