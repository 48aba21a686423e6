#include "pvclift/instances/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pvclift::instances {

Graph::Graph(int n, std::vector<Edge> edges, std::vector<Rational> weights)
    : n_(n), edges_(std::move(edges)), weights_(std::move(weights)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (weights_.empty()) weights_.assign(static_cast<std::size_t>(n), Rational(1));
  if (weights_.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("expected " + std::to_string(n) + " vertex weights");
  }
  for (auto& [i, j] : edges_) {
    if (i == j) throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n) {
      throw std::invalid_argument("edge {" + std::to_string(i) + "," + std::to_string(j) +
                                  "} out of range 1.." + std::to_string(n));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge {" + std::to_string(dup->first) + "," +
                                std::to_string(dup->second) + "}");
  }
}

bool Graph::unit_weights() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const Rational& w) { return w == 1; });
}

int Graph::edge_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{i, j});
  if (it == edges_.end() || *it != Edge{i, j}) return -1;
  return static_cast<int>(it - edges_.begin());
}

Graph make_clique(int n) {
  if (n < 1) throw std::invalid_argument("clique needs n >= 1");
  std::vector<Graph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, std::move(edges));
}

Graph make_star(int n) {
  if (n < 1) throw std::invalid_argument("star needs n >= 1");
  std::vector<Graph::Edge> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(i, n + 1);
  return Graph(n + 1, std::move(edges));
}

namespace {

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw std::invalid_argument("graph line " + std::to_string(line) + ": " + what);
}

int parse_int(const std::string& tok, int line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    parse_error(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) parse_error(line, "expected an integer, got '" + tok + "'");
  return v;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  int n = 0;
  int m = 0;
  std::vector<Graph::Edge> edges;
  std::vector<Rational> weights;
  std::vector<bool> weight_seen;

  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string s; ls >> s;) tok.push_back(s);
    if (tok.empty() || tok[0][0] == '#') continue;

    if (!have_header) {
      if (tok.size() != 2) parse_error(line_no, "header must be 'n m'");
      n = parse_int(tok[0], line_no);
      m = parse_int(tok[1], line_no);
      if (n < 1 || m < 0) parse_error(line_no, "need n >= 1 and m >= 0");
      weights.assign(static_cast<std::size_t>(n), Rational(1));
      weight_seen.assign(static_cast<std::size_t>(n), false);
      have_header = true;
      continue;
    }
    if (tok[0] == "w") {
      if (tok.size() != 3) parse_error(line_no, "weight line must be 'w i value'");
      const int v = parse_int(tok[1], line_no);
      if (v < 1 || v > n) parse_error(line_no, "weight for unknown vertex " + tok[1]);
      if (weight_seen[v - 1]) parse_error(line_no, "second weight for vertex " + tok[1]);
      try {
        weights[v - 1] = linalg::parse_rational(tok[2]);
      } catch (const std::invalid_argument& e) {
        parse_error(line_no, e.what());
      }
      weight_seen[v - 1] = true;
      continue;
    }
    if (tok.size() != 2) parse_error(line_no, "edge line must be 'i j'");
    if (static_cast<int>(edges.size()) == m) parse_error(line_no, "more than m edge lines");
    const int i = parse_int(tok[0], line_no);
    const int j = parse_int(tok[1], line_no);
    if (i < 1 || i > n || j < 1 || j > n) parse_error(line_no, "endpoint out of range 1.." + std::to_string(n));
    if (i == j) parse_error(line_no, "self-loop at vertex " + tok[0]);
    edges.emplace_back(i, j);
  }
  if (!have_header) throw std::invalid_argument("graph: missing 'n m' header");
  if (static_cast<int>(edges.size()) != m) {
    throw std::invalid_argument("graph: header promises " + std::to_string(m) + " edges, found " +
                                std::to_string(edges.size()));
  }
  return Graph(n, std::move(edges), std::move(weights));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [i, j] : g.edges()) out << i << ' ' << j << '\n';
  for (int v = 1; v <= g.num_vertices(); ++v) {
    if (g.weight(v) != 1) out << "w " << v << ' ' << linalg::to_string(g.weight(v)) << '\n';
  }
  return out.str();
}

}  // namespace pvclift::instances
