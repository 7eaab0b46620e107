#include "ghzlab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ghzlab {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 2) throw std::invalid_argument("Graph: need at least two vertices");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("Graph: vertex out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    edges_.emplace(std::min(u, v), std::max(u, v));
  }
}

Graph Graph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return {n, e};
}

Graph Graph::star(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return {n, e};
}

Graph Graph::cycle(int n) {
  auto e = std::vector<std::pair<int, int>>{};
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return {n, e};
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return {n, e};
}

bool Graph::has_edge(int u, int v) const { return edges_.count({std::min(u, v), std::max(u, v)}) > 0; }

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (auto [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Working copy keyed by original labels.
struct LiveGraph {
  std::set<int> vertices;
  std::set<std::pair<int, int>> edges;

  explicit LiveGraph(const Graph& g) : edges(g.edges()) {
    for (int v = 0; v < g.size(); ++v) vertices.insert(v);
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (auto [a, b] : edges) {
      if (a == v) out.push_back(b);
      if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void toggle(int u, int v) {
    const std::pair<int, int> e{std::min(u, v), std::max(u, v)};
    if (!edges.erase(e)) edges.insert(e);
  }

  void local_complement(int v) {
    const auto nb = neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) toggle(nb[i], nb[j]);
  }

  void remove(int v) {
    vertices.erase(v);
    std::erase_if(edges, [v](const auto& e) { return e.first == v || e.second == v; });
  }

  bool connected_without(int skip) const {
    std::set<int> seen;
    std::vector<int> stack;
    for (int v : vertices)
      if (v != skip) {
        stack.push_back(v);
        break;
      }
    if (stack.empty()) return true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (!seen.insert(v).second) continue;
      for (int w : neighbors(v))
        if (w != skip && !seen.count(w)) stack.push_back(w);
    }
    return seen.size() == vertices.size() - (vertices.count(skip) ? 1 : 0);
  }

  void apply(const ReductionStep& s) {
    if (!vertices.count(s.vertex)) throw std::logic_error("reduction: vertex already measured");
    if (s.basis == Basis::X) {
      const auto nb = neighbors(s.vertex);
      if (nb.empty()) throw std::logic_error("reduction: X measurement on an isolated vertex");
      const int b0 = nb.front();
      local_complement(b0);
      local_complement(s.vertex);
      local_complement(b0);
    }
    remove(s.vertex);
  }

  Graph compact() const {
    std::map<int, int> index;
    for (int v : vertices) index.emplace(v, static_cast<int>(index.size()));
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : edges) e.emplace_back(index.at(a), index.at(b));
    return {static_cast<int>(vertices.size()), e};
  }
};

}  // namespace

bool Graph::is_connected() const { return LiveGraph(*this).connected_without(-1); }

Graph parse_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  int max_index = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int u, v;
    if (!(ls >> u)) continue;
    std::string extra;
    if (!(ls >> v) || (ls >> extra))
      throw std::runtime_error("edge list line " + std::to_string(line_no) + ": expected 'u v'");
    if (u < 0 || v < 0) throw std::runtime_error("edge list line " + std::to_string(line_no) + ": negative index");
    edges.emplace_back(u, v);
    max_index = std::max({max_index, u, v});
  }
  if (max_index < 1) throw std::runtime_error("edge list: no edges");
  try {
    return {max_index + 1, edges};
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("edge list: ") + e.what());
  }
}

Graph read_edge_list(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open graph file " + path);
  return parse_edge_list(f);
}

std::vector<ReductionStep> reduction_sequence(const Graph& g) {
  if (g.size() < 3) throw std::invalid_argument("reduction_sequence: need at least three vertices");
  if (!g.is_connected()) throw std::invalid_argument("reduction_sequence: graph is disconnected");
  LiveGraph live(g);
  std::vector<ReductionStep> steps;
  while (live.vertices.size() > 2) {
    ReductionStep step{-1, Basis::Z};
    for (auto it = live.vertices.rbegin(); it != live.vertices.rend(); ++it)
      if (live.connected_without(*it)) {
        step.vertex = *it;
        break;
      }
    if (step.vertex < 0) step = {*live.vertices.rbegin(), Basis::X};
    live.apply(step);
    if (!live.connected_without(-1)) throw std::logic_error("reduction_sequence: disconnected intermediate graph");
    steps.push_back(step);
  }
  return steps;
}

std::vector<Graph> reduce_graph(const Graph& g, const std::vector<ReductionStep>& steps) {
  LiveGraph live(g);
  std::vector<Graph> out{g};
  for (const auto& s : steps) {
    live.apply(s);
    if (live.vertices.size() < 2) throw std::logic_error("reduce_graph: fewer than two vertices left");
    if (!live.connected_without(-1)) throw std::logic_error("reduce_graph: disconnected intermediate graph");
    out.push_back(live.compact());
  }
  return out;
}

std::vector<int> surviving_vertices(const Graph& g, const std::vector<ReductionStep>& steps) {
  LiveGraph live(g);
  for (const auto& s : steps) live.apply(s);
  return {live.vertices.begin(), live.vertices.end()};
}

}  // namespace ghzlab
