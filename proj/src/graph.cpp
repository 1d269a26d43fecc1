#include "rloc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

namespace rloc {

Graph Graph::from_edges(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  Graph g;
  g.labels_ = labels;
  g.adj_.resize(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty() ||
        labels[i].find_first_of(" \t\r\n") != std::string::npos)
      throw std::invalid_argument("label must be nonempty and whitespace-free: '" +
                                  labels[i] + "'");
    auto [it, inserted] = g.index_.emplace(labels[i], static_cast<int>(i));
    if (!inserted)
      throw std::invalid_argument("duplicate label: " + labels[i]);
  }
  for (const auto& [la, lb] : edges) {
    auto ia = g.index_.find(la);
    auto ib = g.index_.find(lb);
    if (ia == g.index_.end())
      throw std::invalid_argument("unknown edge endpoint: " + la);
    if (ib == g.index_.end())
      throw std::invalid_argument("unknown edge endpoint: " + lb);
    int u = ia->second, v = ib->second;
    if (u == v) throw std::invalid_argument("self-loop at " + la);
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    g.edge_count_ += static_cast<int>(nbrs.size());
  }
  g.edge_count_ /= 2;
  return g;
}

std::optional<int> Graph::find_vertex(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Graph::vertex(const std::string& label) const {
  auto v = find_vertex(label);
  if (!v) throw std::invalid_argument("no vertex labelled '" + label + "'");
  return *v;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nbrs = neighbors(u);
  check_vertex(v);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::max_degree() const {
  if (vertex_count() == 0)
    throw std::invalid_argument("max_degree of empty graph");
  int d = 0;
  for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
  return d;
}

std::vector<int> Graph::distances_from(int u) const {
  check_vertex(u);
  std::vector<int> dist(static_cast<std::size_t>(vertex_count()), kUnreachable);
  std::queue<int> q;
  dist[static_cast<std::size_t>(u)] = 0;
  q.push(u);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : adj_[static_cast<std::size_t>(x)]) {
      if (dist[static_cast<std::size_t>(y)] == kUnreachable) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

int Graph::distance(int u, int v) const {
  check_vertex(v);
  return distances_from(u)[static_cast<std::size_t>(v)];
}

bool Graph::is_connected() const {
  if (vertex_count() == 0) return true;
  auto dist = distances_from(0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d == kUnreachable; });
}

VertexSet Graph::closed_neighborhood(const VertexSet& s) const {
  VertexSet out = s;
  for (int v = s.first(); v != -1; v = s.next(v))
    for (int u : neighbors(v)) out.set(u);
  return out;
}

std::string Graph::to_edge_list() const {
  std::ostringstream out;
  out << "graph " << vertex_count() << "\n";
  for (int v = 0; v < vertex_count(); ++v)
    out << "v " << v << " " << labels_[static_cast<std::size_t>(v)] << "\n";
  for (auto [u, v] : edges())
    out << "e " << labels_[static_cast<std::size_t>(u)] << " "
        << labels_[static_cast<std::size_t>(v)] << "\n";
  return out.str();
}

Graph Graph::parse_edge_list(std::istream& in) {
  std::string line;
  int declared = -1;
  std::vector<std::pair<int, std::string>> verts;
  std::vector<std::pair<std::string, std::string>> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    auto fail = [&](const std::string& why) {
      throw ParseError("edge list line " + std::to_string(lineno) + ": " + why);
    };
    if (tok == "graph") {
      if (declared != -1) fail("duplicate graph header");
      if (!(ls >> declared) || declared < 0) fail("bad vertex count");
    } else if (tok == "v") {
      int idx;
      std::string label;
      if (!(ls >> idx >> label)) fail("bad vertex line");
      verts.emplace_back(idx, label);
    } else if (tok == "e") {
      std::string a, b;
      if (!(ls >> a >> b)) fail("bad edge line");
      edges.emplace_back(a, b);
    } else {
      fail("unknown record '" + tok + "'");
    }
  }
  if (declared == -1) throw ParseError("missing 'graph <n>' header");
  if (static_cast<int>(verts.size()) != declared)
    throw ParseError("header declares " + std::to_string(declared) +
                     " vertices, found " + std::to_string(verts.size()));
  std::vector<std::string> labels(static_cast<std::size_t>(declared));
  std::vector<bool> seen(static_cast<std::size_t>(declared), false);
  for (const auto& [idx, label] : verts) {
    if (idx < 0 || idx >= declared)
      throw ParseError("vertex index out of range: " + std::to_string(idx));
    if (seen[static_cast<std::size_t>(idx)])
      throw ParseError("duplicate vertex index: " + std::to_string(idx));
    seen[static_cast<std::size_t>(idx)] = true;
    labels[static_cast<std::size_t>(idx)] = label;
  }
  try {
    return from_edges(labels, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Graph Graph::parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Graph Graph::load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_edge_list(in);
}

}  // namespace rloc
