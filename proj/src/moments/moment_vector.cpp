#include "pvclift/moments/moment_vector.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <mutex>
#include <stdexcept>

namespace pvclift::moments {

DistParams::DistParams(Graph g, Rational p_) : graph(std::move(g)), p(std::move(p_)) {
  if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0, 1], got " + linalg::to_string(p));
}

MomentVector::MomentVector(DistParams params, MomentOptions options)
    : params_(std::move(params)),
      universe_(params_.graph),
      options_(options),
      shards_(std::make_unique<std::array<Shard, kShards>>()) {
  if (options_.support_cap < 1 || options_.support_cap > 30) {
    throw std::invalid_argument("support cap must be within 1..30");
  }
  const Rational q = 1 - params_.p;
  bernoulli_.resize(static_cast<std::size_t>(options_.support_cap) + 1);
  for (int k = 0; k <= options_.support_cap; ++k) {
    bernoulli_[k].resize(static_cast<std::size_t>(k) + 1);
    for (int a = 0; a <= k; ++a) {
      bernoulli_[k][a] = linalg::power(params_.p, a) * linalg::power(q, k - a);
    }
  }
}

Rational MomentVector::probability(const VarSet& ones, const VarSet& zeros) const {
  // vertices touched by the event, each assigned a bit
  std::vector<int> support;
  auto touch = [&](VarId id) {
    if (universe_.is_vertex(id)) {
      support.push_back(static_cast<int>(id) + 1);
    } else {
      const auto& [i, j] = universe_.endpoints(id);
      support.push_back(i);
      support.push_back(j);
    }
  };
  for (VarId id : ones) touch(id);
  for (VarId id : zeros) touch(id);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  const int k = static_cast<int>(support.size());
  if (k > options_.support_cap) {
    throw std::length_error("event touches " + std::to_string(k) + " vertices, cap is " +
                            std::to_string(options_.support_cap));
  }
  auto bit = [&](int vertex) {
    return 1u << (std::lower_bound(support.begin(), support.end(), vertex) - support.begin());
  };

  std::uint32_t must_one = 0;
  std::uint32_t must_zero = 0;
  std::vector<std::uint32_t> need_any;  // edges in `ones`: some endpoint chosen
  for (VarId id : ones) {
    if (universe_.is_vertex(id)) {
      must_one |= bit(static_cast<int>(id) + 1);
    } else {
      const auto& [i, j] = universe_.endpoints(id);
      need_any.push_back(bit(i) | bit(j));
    }
  }
  for (VarId id : zeros) {
    if (universe_.is_vertex(id)) {
      must_zero |= bit(static_cast<int>(id) + 1);
    } else {
      const auto& [i, j] = universe_.endpoints(id);
      must_zero |= bit(i) | bit(j);
    }
  }
  if (must_one & must_zero) return Rational(0);

  const std::uint32_t all = k == 32 ? ~0u : ((1u << k) - 1);
  const std::uint32_t free_bits = all & ~(must_one | must_zero);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(k) + 1, 0);
  // walk every submask of free_bits, including 0
  std::uint32_t sub = free_bits;
  for (;;) {
    const std::uint32_t assign = must_one | sub;
    bool ok = true;
    for (std::uint32_t m : need_any) {
      if (!(assign & m)) {
        ok = false;
        break;
      }
    }
    if (ok) ++counts[std::popcount(assign)];
    if (sub == 0) break;
    sub = (sub - 1) & free_bits;
  }

  Rational total;
  for (int a = 0; a <= k; ++a) {
    if (counts[a]) total += Rational(linalg::Integer(static_cast<unsigned long>(counts[a]))) * bernoulli_[k][a];
  }
  return total;
}

Rational MomentVector::value(const VarSet& a) const {
  auto& shard = (*shards_)[instances::VarSetHash{}(a) % kShards];
  {
    std::shared_lock lock(shard.mutex);
    auto it = shard.values.find(a);
    if (it != shard.values.end()) return it->second;
  }
  Rational v = probability(a, VarSet{});
  std::unique_lock lock(shard.mutex);
  shard.values.emplace(a, v);
  return v;
}

Rational MomentVector::inclusion_exclusion(const VarSet& y, const VarSet& n) const {
  const auto& nids = n.ids();
  const std::size_t terms = std::size_t{1} << nids.size();
  Rational ie;
  for (std::size_t mask = 0; mask < terms; ++mask) {
    std::vector<VarId> ids = y.ids();
    for (std::size_t b = 0; b < nids.size(); ++b) {
      if (mask >> b & 1u) ids.push_back(nids[b]);
    }
    const Rational term = value(VarSet(std::move(ids)));
    if (std::popcount(mask) % 2) {
      ie -= term;
    } else {
      ie += term;
    }
  }
  return ie;
}

Rational MomentVector::lifted_weight(const VarSet& y, const VarSet& n) const {
  const Rational ie = inclusion_exclusion(y, n);
  const Rational direct = probability(y, n);
  if (ie != direct) {
    throw std::logic_error("inclusion-exclusion disagrees with direct enumeration for Y=" +
                           universe_.describe(y) + " N=" + universe_.describe(n));
  }
  return direct;
}

CondWeight MomentVector::cond_weight(const VarSet& y, const VarSet& n) const {
  if (y.intersects(n)) {
    throw std::invalid_argument("Y and N must be disjoint: Y=" + universe_.describe(y) +
                                " N=" + universe_.describe(n));
  }
  CondWeight w;
  w.direct = probability(y, n);
  w.inclusion_exclusion = inclusion_exclusion(y, n);
  if (w.inclusion_exclusion != w.direct) {
    throw std::logic_error("inclusion-exclusion disagrees with direct enumeration for Y=" +
                           universe_.describe(y) + " N=" + universe_.describe(n));
  }
  return w;
}

std::size_t MomentVector::cached_sets() const {
  std::size_t total = 0;
  for (auto& shard : *shards_) {
    std::shared_lock lock(shard.mutex);
    total += shard.values.size();
  }
  return total;
}

Rational moment(const DistParams& params, const VarSet& a) {
  return MomentVector(params).probability(a, VarSet{});
}

CondWeight cond_weight(const DistParams& params, const VarSet& y, const VarSet& n) {
  return MomentVector(params).cond_weight(y, n);
}

std::vector<VarSet> p1_index(const Universe& u) {
  std::vector<VarSet> idx;
  idx.reserve(u.size() + 1);
  idx.emplace_back();
  for (VarId q = 0; q < u.size(); ++q) idx.push_back(VarSet{q});
  return idx;
}

CondMomentMatrix build_cond_matrix(const MomentVector& mv, const VarSet& y, const VarSet& n, Execution exec) {
  if (y.intersects(n)) throw std::invalid_argument("Y and N must be disjoint");
  const auto idx = p1_index(mv.universe());
  const std::size_t dim = idx.size();
  CondMomentMatrix out{y, n, linalg::SymMatrix(dim)};
#pragma omp parallel for schedule(dynamic, 1) if (exec == Execution::parallel)
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      out.matrix(a, b) = mv.lifted_weight(y.united(idx[a]).united(idx[b]), n);
    }
  }
  return out;
}

}  // namespace pvclift::moments
