#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pvclift/linalg/rational.hpp"

namespace pvclift::instances {

using linalg::Rational;

/// Undirected simple graph on vertices 1..n with rational vertex weights.
/// Edges are stored as (i, j) with i < j in lexicographic order; that order
/// is the edge order used everywhere else (variable layout, certificates).
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;

  /// Throws std::invalid_argument on self-loops, duplicates, endpoints out
  /// of range, or a weight vector of the wrong length. Edge endpoints may be
  /// given in either order. Empty weights mean all ones.
  Graph(int n, std::vector<Edge> edges, std::vector<Rational> weights = {});

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Rational& weight(int vertex) const { return weights_.at(vertex - 1); }
  const std::vector<Rational>& weights() const { return weights_; }
  bool unit_weights() const;

  /// Position of edge {i, j} in edges(), or -1.
  int edge_index(int i, int j) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Rational> weights_;
};

/// Complete graph K_n. Throws std::invalid_argument for n < 1.
Graph make_clique(int n);

/// Star with leaves 1..n and center n+1. Throws std::invalid_argument for n < 1.
Graph make_star(int n);

/// Graph text format:
///
///     # comment
///     n m
///     i j            (exactly m edge lines, 1 <= i, j <= n)
///     w i value      (optional vertex weight lines; value is "a" or "a/b")
///
/// Blank lines and lines starting with '#' are ignored anywhere. Unlisted
/// vertices have weight 1. Throws std::invalid_argument with a line number
/// on malformed input.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

}  // namespace pvclift::instances
