#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rloc/vertex_set.hpp"

namespace rloc {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable labelled undirected graph. Vertices are dense integer indices;
/// labels appear only at the I/O boundary. Adjacency lists are sorted, so
/// "lowest index" choices elsewhere are deterministic. Safe to share across
/// threads once built.
class Graph {
 public:
  /// Unreachable pairs report this sentinel, never a large number.
  static constexpr int kUnreachable = -1;

  /// An empty graph; populate through from_edges or the parsers.
  Graph() = default;

  /// Builds a graph from unique labels and label pairs. Duplicate edges
  /// collapse; self-loops, unknown endpoints and duplicate labels throw
  /// std::invalid_argument.
  static Graph from_edges(
      const std::vector<std::string>& labels,
      const std::vector<std::pair<std::string, std::string>>& edges);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return edge_count_; }

  const std::string& label(int v) const {
    check_vertex(v);
    return labels_[static_cast<std::size_t>(v)];
  }
  std::optional<int> find_vertex(const std::string& label) const;
  /// Index of a label that must exist.
  int vertex(const std::string& label) const;

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int u, int v) const;
  /// All edges as (u, v) pairs with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  int max_degree() const;
  bool is_connected() const;

  /// BFS distance; kUnreachable across components; distance(u, u) == 0.
  int distance(int u, int v) const;
  /// One BFS sweep; entry v equals distance(u, v).
  std::vector<int> distances_from(int u) const;

  /// s together with all neighbours of members of s.
  VertexSet closed_neighborhood(const VertexSet& s) const;

  // Edge-list text format. Canonical output round-trips bit-exactly:
  //   graph <vertex_count>
  //   v <index> <label>
  //   e <label1> <label2>
  // Lines beginning '#' are comments; labels must not contain whitespace.
  std::string to_edge_list() const;
  static Graph parse_edge_list(std::istream& in);
  static Graph parse_edge_list(const std::string& text);
  static Graph load_edge_list_file(const std::string& path);

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
      throw std::invalid_argument("vertex index out of range: " +
                                  std::to_string(v));
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<int>> adj_;
  std::unordered_map<std::string, int> index_;
  int edge_count_ = 0;
};

}  // namespace rloc
