#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "pvclift/instances/graph.hpp"
#include "pvclift/instances/var_set.hpp"
#include "pvclift/linalg/sym_matrix.hpp"
#include "pvclift/parallel.hpp"

namespace pvclift::moments {

using instances::Graph;
using instances::Universe;
using instances::VarId;
using instances::VarSet;
using linalg::Rational;

/// Distribution D_p on 0-1 assignments of V u E: each vertex is chosen
/// independently with probability p, and an edge variable is 1 exactly when
/// one of its endpoints is chosen.
struct DistParams {
  Graph graph;
  Rational p;

  /// Throws std::invalid_argument unless 0 <= p <= 1.
  DistParams(Graph g, Rational p);
};

/// Both evaluations of w_{Y,N}. They are always equal; cond_weight throws
/// std::logic_error if they ever are not.
struct CondWeight {
  Rational inclusion_exclusion;  // sum_{T subset N} (-1)^|T| y_{Y u T}
  Rational direct;               // Pr[all of Y are 1, all of N are 0]

  const Rational& value() const { return direct; }
};

struct MomentOptions {
  /// Largest number of vertices a single event may touch.
  int support_cap = 26;
};

/// The moment vector y_A = Pr_{D_p}[x_q = 1 for all q in A], evaluated lazily
/// and memoized by canonical set. Safe for concurrent use.
class MomentVector {
 public:
  explicit MomentVector(DistParams params, MomentOptions options = {});

  const DistParams& params() const { return params_; }
  const Graph& graph() const { return params_.graph; }
  const Universe& universe() const { return universe_; }
  const Rational& p() const { return params_.p; }

  /// y_A (memoized).
  Rational value(const VarSet& a) const;

  /// Pr[X_q = 1 for q in ones, X_q = 0 for q in zeros] by enumerating the
  /// Bernoulli(p) assignments of the vertices the event touches. Overlapping
  /// sets give 0. Throws std::length_error past the support cap.
  Rational probability(const VarSet& ones, const VarSet& zeros) const;

  /// w_{Y,N} by both routes. Throws std::invalid_argument if Y and N meet.
  CondWeight cond_weight(const VarSet& y, const VarSet& n) const;

  /// w_{Y,N} without the disjointness precondition. When Y and N share a
  /// variable the inclusion-exclusion sum cancels to 0, matching the
  /// contradictory event; this is the form lifted constraints need, where
  /// Y u {q} may touch N.
  Rational lifted_weight(const VarSet& y, const VarSet& n) const;

  std::size_t cached_sets() const;

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    mutable std::shared_mutex mutex;
    std::unordered_map<VarSet, Rational, instances::VarSetHash> values;
  };

  Rational inclusion_exclusion(const VarSet& y, const VarSet& n) const;

  DistParams params_;
  Universe universe_;
  MomentOptions options_;
  // bernoulli_[k][a] = p^a (1-p)^(k-a)
  std::vector<std::vector<Rational>> bernoulli_;
  std::unique_ptr<std::array<Shard, kShards>> shards_;
};

/// Direct (unmemoized) y_A.
Rational moment(const DistParams& params, const VarSet& a);

/// w_{Y,N} by both routes; throws on overlapping Y, N.
CondWeight cond_weight(const DistParams& params, const VarSet& y, const VarSet& n);

/// Row/column layout of P_1 = {empty} u {{q} : q in V u E}: index 0 is the
/// empty set, index 1 + id is the singleton of variable id.
std::vector<VarSet> p1_index(const Universe& u);

/// X^{Y,N}: rows and columns indexed by P_1, entry (A, B) = w_{Y u A u B, N}.
struct CondMomentMatrix {
  VarSet y;
  VarSet n;
  linalg::SymMatrix matrix;
};

CondMomentMatrix build_cond_matrix(const MomentVector& mv, const VarSet& y, const VarSet& n,
                                   Execution exec = Execution::parallel);

}  // namespace pvclift::moments
