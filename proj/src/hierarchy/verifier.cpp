#include "pvclift/hierarchy/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pvclift::hierarchy {

using instances::PvcConstraint;
using instances::VarId;

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Fnv {
  std::uint64_t h = 1469598103934665603ull;
  void add(std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  void add(const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    add(s.size());
  }
};

// Lexicographic successor of a strictly increasing combination over [0, m).
bool next_combination(std::vector<VarId>& c, std::size_t m) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < m - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::string> constraint_names(const std::vector<PvcConstraint>& cs) {
  std::vector<std::string> names;
  names.reserve(cs.size());
  for (const auto& c : cs) names.push_back(c.name);
  return names;
}

void fill_objective_and_gap(const MomentVector& mv, int t, const VerifyOptions& options, SaVerdict& v) {
  const Graph& g = mv.graph();
  const auto& u = mv.universe();
  v.objective_value = 0;
  for (int i = 1; i <= g.num_vertices(); ++i) {
    v.objective_value += g.weight(i) * mv.value(VarSet{u.vertex_id(i)});
  }
  if (options.integral_opt) {
    v.integral_opt = options.integral_opt;
  } else if (g.num_vertices() <= 24) {
    v.integral_opt = instances::brute_force_cover(g, t, options.execution).value;
  }
  if (v.integral_opt && v.objective_value > 0) {
    v.integrality_gap_lower_bound = *v.integral_opt / v.objective_value;
  }
}

// First violated constraint of P_t(G) lifted by (Y, N), if any.
std::optional<Violation> check_pair(const MomentVector& mv, const std::vector<PvcConstraint>& cs,
                                    const YnPair& pair) {
  const std::size_t m = mv.universe().size();
  const Rational base = mv.lifted_weight(pair.y, pair.n);
  std::vector<Rational> lifted(m);
  for (VarId q = 0; q < m; ++q) lifted[q] = mv.lifted_weight(pair.y.with(q), pair.n);

  for (std::size_t ci = 0; ci < cs.size(); ++ci) {
    const auto& c = cs[ci];
    Rational lhs;
    for (const auto& [q, a] : c.terms) lhs += a * lifted[q];
    Rational rhs = c.rhs * base;
    if (lhs < rhs) return Violation{c.name, pair, std::move(lhs), std::move(rhs), 0, ci};
  }
  return std::nullopt;
}

}  // namespace

std::vector<YnPair> enumerate_pairs(std::size_t universe_size, int max_size) {
  std::vector<YnPair> out;
  for (int s = 0; s <= max_size && static_cast<std::size_t>(s) <= universe_size; ++s) {
    std::vector<VarId> comb(static_cast<std::size_t>(s));
    std::iota(comb.begin(), comb.end(), VarId{0});
    do {
      for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
        std::vector<VarId> y;
        std::vector<VarId> n;
        for (int b = 0; b < s; ++b) (mask >> b & 1u ? y : n).push_back(comb[b]);
        out.push_back({VarSet(std::move(y)), VarSet(std::move(n))});
      }
    } while (next_combination(comb, universe_size));
  }
  return out;
}

std::uint64_t enumeration_fingerprint(const std::vector<YnPair>& pairs,
                                      const std::vector<std::string>& constraint_names) {
  Fnv f;
  f.add(pairs.size());
  for (const auto& p : pairs) {
    f.add(p.y.size());
    for (VarId id : p.y) f.add(id);
    f.add(p.n.size());
    for (VarId id : p.n) f.add(id);
  }
  f.add(constraint_names.size());
  for (const auto& name : constraint_names) f.add(name);
  return f.h;
}

SaVerdict verify_sa(const MomentVector& mv, int t, int r, const VerifyOptions& options) {
  if (r < 0) throw std::invalid_argument("level r must be nonnegative");
  const auto cs = instances::pvc_constraints(mv.graph(), t);
  const auto pairs = enumerate_pairs(mv.universe().size(), r);

  SaVerdict verdict;
  verdict.fingerprint = enumeration_fingerprint(pairs, constraint_names(cs));

  std::optional<Violation> found;
  if (options.execution == Execution::serial) {
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (auto v = check_pair(mv, cs, pairs[k])) {
        v->pair_index = k;
        found = std::move(v);
        break;
      }
    }
  } else {
    // Every thread skips pairs past the best violation so far; the minimum
    // index wins regardless of scheduling.
    std::atomic<std::size_t> best{kNone};
#pragma omp parallel for schedule(dynamic, 8)
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (k > best.load(std::memory_order_relaxed)) continue;
      if (auto v = check_pair(mv, cs, pairs[k])) {
        v->pair_index = k;
#pragma omp critical(pvclift_sa_best)
        if (k < best.load()) {
          best.store(k);
          found = std::move(v);
        }
      }
    }
  }

  if (found) {
    verdict.feasible = false;
    verdict.pairs_checked = found->pair_index + 1;
    verdict.constraints_checked = found->pair_index * cs.size() + found->constraint_index + 1;
    verdict.violated = std::move(found);
  } else {
    verdict.pairs_checked = pairs.size();
    verdict.constraints_checked = pairs.size() * cs.size();
  }
  fill_objective_and_gap(mv, t, options, verdict);
  return verdict;
}

SaVerdict verify_sa(const Graph& g, int t, int r, const DistParams& params, const VerifyOptions& options) {
  if (!(params.graph == g)) throw std::invalid_argument("distribution is over a different graph");
  return verify_sa(MomentVector(params), t, r, options);
}

SaVerdict verify_sap(const MomentVector& mv, int t, int r, const VerifyOptions& options) {
  SaVerdict verdict = verify_sa(mv, t, r, options);
  const auto x = moments::build_cond_matrix(mv, VarSet{}, VarSet{}, options.execution);
  auto psd = linalg::psd_check(x.matrix, options.execution);
  verdict.psd_checks = 1;
  if (!psd.is_psd) {
    verdict.feasible = false;
    verdict.psd_failure = PsdFailure{{VarSet{}, VarSet{}}, 0, std::move(psd)};
  }
  return verdict;
}

SaVerdict verify_sap(const Graph& g, int t, int r, const DistParams& params, const VerifyOptions& options) {
  if (!(params.graph == g)) throw std::invalid_argument("distribution is over a different graph");
  return verify_sap(MomentVector(params), t, r, options);
}

std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k >= n) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    return all;
  }
  std::uint64_t state = seed;
  auto next = [&state] {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  auto below = [&](std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  };
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(below(n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

SaVerdict verify_xyn_family(const MomentVector& mv, int t, int r, const XynOptions& options) {
  if (r < 0) throw std::invalid_argument("level r must be nonnegative");
  auto pairs = enumerate_pairs(mv.universe().size(), r - 1);
  if (options.sample) {
    std::vector<YnPair> chosen;
    for (std::size_t k : sample_indices(pairs.size(), *options.sample, options.seed)) {
      chosen.push_back(std::move(pairs[k]));
    }
    pairs = std::move(chosen);
  }

  SaVerdict verdict;
  verdict.fingerprint = enumeration_fingerprint(pairs, {"psd X^{Y,N}"});

  std::optional<PsdFailure> found;
  auto check = [&](std::size_t k, Execution inner) -> std::optional<PsdFailure> {
    const auto x = moments::build_cond_matrix(mv, pairs[k].y, pairs[k].n, inner);
    auto psd = linalg::psd_check(x.matrix, inner);
    if (psd.is_psd) return std::nullopt;
    return PsdFailure{pairs[k], k, std::move(psd)};
  };

  if (options.execution == Execution::serial) {
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((found = check(k, Execution::serial))) break;
    }
  } else if (pairs.size() == 1) {
    found = check(0, Execution::parallel);
  } else {
    std::atomic<std::size_t> best{kNone};
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (k > best.load(std::memory_order_relaxed)) continue;
      if (auto f = check(k, Execution::serial)) {
#pragma omp critical(pvclift_xyn_best)
        if (k < best.load()) {
          best.store(k);
          found = std::move(f);
        }
      }
    }
  }

  if (found) {
    verdict.feasible = false;
    verdict.pairs_checked = found->pair_index + 1;
    verdict.psd_failure = std::move(found);
  } else {
    verdict.pairs_checked = pairs.size();
  }
  verdict.psd_checks = verdict.pairs_checked;
  fill_objective_and_gap(mv, t, options, verdict);
  return verdict;
}

SaVerdict verify_xyn_family(const Graph& g, int t, int r, const DistParams& params, const XynOptions& options) {
  if (!(params.graph == g)) throw std::invalid_argument("distribution is over a different graph");
  return verify_xyn_family(MomentVector(params), t, r, options);
}

linalg::LinearProgram generate_sa1_lp(const Graph& g, int t, std::size_t max_variables) {
  const instances::Universe u(g);
  const std::size_t m = u.size();
  const std::size_t count = 1 + m + m * (m - 1) / 2;
  if (count > max_variables) {
    throw std::invalid_argument("level-1 lift needs " + std::to_string(count) + " variables, cap is " +
                                std::to_string(max_variables));
  }

  // y_empty, y_{q}, then y_{a,b} for a < b in lexicographic order
  auto single = [](VarId q) { return std::size_t{1} + q; };
  auto pair = [&](VarId a, VarId b) {
    if (a == b) return single(a);
    if (a > b) std::swap(a, b);
    return 1 + m + a * m - static_cast<std::size_t>(a) * (a + 1) / 2 + (b - a - 1);
  };

  std::vector<std::string> names(count);
  names[0] = "y{}";
  for (VarId a = 0; a < m; ++a) {
    names[single(a)] = "y" + u.describe(VarSet{a});
    for (VarId b = a + 1; b < m; ++b) names[pair(a, b)] = "y" + u.describe(VarSet{a, b});
  }
  linalg::LinearProgram lp(std::move(names), linalg::Direction::minimize);

  for (const auto& c : instances::pvc_constraints(g, t)) {
    for (VarId q = 0; q < m; ++q) {
      // (a.x - b) * x_q  ->  sum_i a_i y_{i,q} - b y_{q}
      std::vector<Rational> up(count);
      // (a.x - b) * (1 - x_q)  ->  sum_i a_i (y_{i} - y_{i,q}) - b (y_{} - y_{q})
      std::vector<Rational> down(count);
      for (const auto& [i, a] : c.terms) {
        up[pair(i, q)] += a;
        down[single(i)] += a;
        down[pair(i, q)] -= a;
      }
      up[single(q)] -= c.rhs;
      down[0] -= c.rhs;
      down[single(q)] += c.rhs;
      lp.add_row(std::move(up), linalg::Sense::ge, Rational(0), c.name + " * x_" + u.name(q));
      lp.add_row(std::move(down), linalg::Sense::ge, Rational(0), c.name + " * (1 - x_" + u.name(q) + ")");
    }
  }
  std::vector<Rational> normalize(count);
  normalize[0] = 1;
  lp.add_row(std::move(normalize), linalg::Sense::eq, Rational(1), "y{} = 1");

  std::vector<Rational> obj(count);
  for (int i = 1; i <= g.num_vertices(); ++i) obj[single(u.vertex_id(i))] = g.weight(i);
  lp.set_objective(std::move(obj));
  return lp;
}

}  // namespace pvclift::hierarchy
