// Simple undirected graphs and the measurement rewrites used to shrink graph states.

#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ghzlab {

class Graph {
public:
  /// n >= 2 vertices labelled 0..n-1. Throws on self-loops or out-of-range endpoints.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  static Graph path(int n);
  /// Vertex 0 is the center.
  static Graph star(int n);
  static Graph cycle(int n);
  static Graph complete(int n);

  int size() const { return n_; }
  /// Edges with first < second.
  const std::set<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  std::vector<int> neighbors(int v) const;
  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  int n_;
  std::set<std::pair<int, int>> edges_;
};

/// Edge-list text: one "u v" pair per line, 0-indexed, '#' starts a comment.
/// Vertex count is the largest index + 1. Throws std::runtime_error on malformed input.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list(const std::string& path);

enum class Basis { Z, X };

struct ReductionStep {
  int vertex;  // label in the original graph
  Basis basis;
  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

/// Greedy reduction of a connected graph (n >= 3) down to two vertices: Z-measure the
/// highest-labelled vertex whose deletion keeps the graph connected; fall back to an
/// X measurement (designated neighbor = lowest-labelled neighbor) only when no such
/// vertex exists. Length is n - 2.
std::vector<ReductionStep> reduction_sequence(const Graph& g);

/// Graphs visited by applying `steps` to g, starting with g itself. Each graph is
/// relabelled compactly with the surviving original labels in ascending order.
/// Throws std::logic_error if any intermediate graph is disconnected or a step names a
/// vertex that is already gone.
std::vector<Graph> reduce_graph(const Graph& g, const std::vector<ReductionStep>& steps);

/// Surviving original labels after `steps`, ascending.
std::vector<int> surviving_vertices(const Graph& g, const std::vector<ReductionStep>& steps);

}  // namespace ghzlab
