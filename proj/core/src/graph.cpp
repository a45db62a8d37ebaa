#include "indseq/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "indseq/error.hpp"

namespace indseq {

Graph::Graph(int n) {
  if (n < 0) throw GraphError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edge_list(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (!valid_vertex(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
  return adj_[static_cast<std::size_t>(v)];
}

bool Graph::adjacent(int u, int v) const {
  const auto& nu = neighbors(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int Graph::add_vertex() {
  adj_.emplace_back();
  return vertex_count() - 1;
}

void Graph::add_edge(int u, int v) {
  if (!valid_vertex(u) || !valid_vertex(v)) {
    throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint out of range");
  }
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) {
    throw GraphError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  nu.insert(it, v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
  if (!adjacent(u, v)) throw GraphError("no edge to remove");
  auto& nu = adj_[u];
  nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
  auto& nv = adj_[v];
  nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
  --edge_count_;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(adj_.size(), 0);
  std::vector<int> stack;
  for (int s = 0; s < vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : adj_[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const { return components().size() <= 1; }

bool Graph::is_forest() const { return edge_count_ + components().size() == adj_.size(); }

Graph Graph::induced(const std::vector<int>& keep) const {
  std::vector<int> index(adj_.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!valid_vertex(keep[i])) throw GraphError("induced: vertex out of range");
    index[keep[i]] = static_cast<int>(i);
  }
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (int v : adj_[keep[i]]) {
      const int j = index[v];
      if (j < 0) continue;
      out.adj_[i].push_back(j);
      if (static_cast<int>(i) < j) ++out.edge_count_;
    }
    std::sort(out.adj_[i].begin(), out.adj_[i].end());
  }
  return out;
}

void MarkedGraph::validate(bool need_w) const {
  if (!graph.valid_vertex(v)) throw GraphError("marked vertex v out of range");
  if (w && !graph.valid_vertex(*w)) throw GraphError("marked vertex w out of range");
  if (need_w) {
    if (!w) throw GraphError("second marked vertex w required");
    if (!graph.adjacent(v, *w)) throw GraphError("marked vertices v and w must be adjacent");
  }
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.vertex_count() + b.vertex_count());
  for (const auto& [u, v] : a.edges()) out.add_edge(u, v);
  const int off = a.vertex_count();
  for (const auto& [u, v] : b.edges()) out.add_edge(u + off, v + off);
  return out;
}

std::string to_edge_list_text(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph parse_edge_list(std::istream& in) {
  long n = 0;
  long m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) throw GraphError("edge list: bad header, expected \"n m\"");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    long u = 0;
    long v = 0;
    if (!(in >> u >> v)) throw GraphError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string rest;
  if (in >> rest) throw GraphError("edge list: unexpected data after " + std::to_string(m) + " edges");
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  return parse_edge_list(in);
}

}  // namespace indseq
