#include "pvclift/instances/var_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace pvclift::instances {

std::string VarIndex::name() const {
  if (kind == Kind::vertex) return "v" + std::to_string(a);
  return "e" + std::to_string(a) + "-" + std::to_string(b);
}

VarSet::VarSet(std::initializer_list<VarId> ids) : VarSet(std::vector<VarId>(ids)) {}

VarSet::VarSet(std::vector<VarId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VarSet::contains(VarId id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

bool VarSet::intersects(const VarSet& other) const {
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

VarSet VarSet::with(VarId id) const {
  VarSet out;
  out.ids_.reserve(ids_.size() + 1);
  auto pos = std::lower_bound(ids_.begin(), ids_.end(), id);
  out.ids_.assign(ids_.begin(), pos);
  if (pos == ids_.end() || *pos != id) out.ids_.push_back(id);
  out.ids_.insert(out.ids_.end(), pos, ids_.end());
  return out;
}

VarSet VarSet::united(const VarSet& other) const {
  VarSet out;
  out.ids_.reserve(ids_.size() + other.ids_.size());
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out.ids_));
  return out;
}

bool canonical_less(const VarSet& a, const VarSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::size_t VarSetHash::operator()(const VarSet& s) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (VarId id : s) {
    h ^= id + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

Universe::Universe(const Graph& g) : n_(g.num_vertices()), edges_(g.edges()) {}

VarId Universe::vertex_id(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("no vertex " + std::to_string(i));
  return static_cast<VarId>(i - 1);
}

VarId Universe::edge_id(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Graph::Edge{i, j});
  if (it == edges_.end() || *it != Graph::Edge{i, j}) {
    throw std::out_of_range("no edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
  }
  return static_cast<VarId>(n_ + (it - edges_.begin()));
}

VarId Universe::id_of(const VarIndex& v) const {
  return v.is_vertex() ? vertex_id(v.a) : edge_id(v.a, v.b);
}

VarIndex Universe::index_of(VarId id) const {
  if (is_vertex(id)) return VarIndex::vertex(static_cast<int>(id) + 1);
  const auto& [i, j] = endpoints(id);
  return VarIndex::edge(i, j);
}

std::string Universe::describe(const VarSet& s) const {
  std::string out = "{";
  bool first = true;
  for (VarId id : s) {
    if (!first) out += ",";
    out += name(id);
    first = false;
  }
  return out + "}";
}

VarSet Universe::make_set(std::initializer_list<VarIndex> vars) const {
  std::vector<VarId> ids;
  for (const auto& v : vars) ids.push_back(id_of(v));
  return VarSet(std::move(ids));
}

}  // namespace pvclift::instances
