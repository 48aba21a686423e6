#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "pvclift/instances/graph.hpp"

namespace pvclift::instances {

/// A variable of P_t(G): either x_i for a vertex or x_e for an edge.
struct VarIndex {
  enum class Kind { vertex, edge };
  Kind kind = Kind::vertex;
  int a = 0;  // vertex, or smaller endpoint
  int b = 0;  // larger endpoint (edges only)

  static VarIndex vertex(int i) { return {Kind::vertex, i, 0}; }
  static VarIndex edge(int i, int j) { return i < j ? VarIndex{Kind::edge, i, j} : VarIndex{Kind::edge, j, i}; }

  bool is_vertex() const { return kind == Kind::vertex; }

  /// "v3" or "e1-4"
  std::string name() const;

  friend bool operator==(const VarIndex&, const VarIndex&) = default;
};

using VarId = std::uint32_t;

/// Canonical set of variable ids: sorted, duplicate-free. Since ids number
/// vertices first and then edges lexicographically, sorted ids are exactly
/// the canonical variable order.
class VarSet {
 public:
  VarSet() = default;
  VarSet(std::initializer_list<VarId> ids);
  explicit VarSet(std::vector<VarId> ids);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::vector<VarId>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  bool contains(VarId id) const;
  bool intersects(const VarSet& other) const;
  VarSet with(VarId id) const;
  VarSet united(const VarSet& other) const;

  friend bool operator==(const VarSet&, const VarSet&) = default;
  /// Lexicographic on the id list.
  friend std::strong_ordering operator<=>(const VarSet& a, const VarSet& b) { return a.ids_ <=> b.ids_; }

 private:
  std::vector<VarId> ids_;
};

/// Size first, then lexicographic: the enumeration order of subsets.
bool canonical_less(const VarSet& a, const VarSet& b);

struct VarSetHash {
  std::size_t operator()(const VarSet& s) const noexcept;
};

/// The ground set V u E of P_t(G) with its fixed id layout: vertex i has id
/// i-1, the k-th edge (lexicographic) has id n+k.
class Universe {
 public:
  explicit Universe(const Graph& g);

  std::size_t size() const { return static_cast<std::size_t>(n_) + edges_.size(); }
  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  VarId vertex_id(int i) const;
  VarId edge_id(int i, int j) const;
  VarId id_of(const VarIndex& v) const;
  VarIndex index_of(VarId id) const;
  bool is_vertex(VarId id) const { return id < static_cast<VarId>(n_); }

  /// Endpoints of an edge id as 1-based vertices.
  const Graph::Edge& endpoints(VarId id) const { return edges_.at(id - n_); }

  std::string name(VarId id) const { return index_of(id).name(); }
  /// "{v1,e1-2}"
  std::string describe(const VarSet& s) const;
  VarSet make_set(std::initializer_list<VarIndex> vars) const;

 private:
  int n_;
  std::vector<Graph::Edge> edges_;
};

}  // namespace pvclift::instances
