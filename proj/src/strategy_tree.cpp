#include "rloc/strategy_tree.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace rloc {

int StrategyTree::depth() const {
  if (nodes.empty()) return 0;
  std::vector<int> memo(nodes.size(), -1);
  std::function<int(int)> rec = [&](int i) -> int {
    int& d = memo[static_cast<std::size_t>(i)];
    if (d != -1) return d;
    int worst = 1;
    for (const auto& e : nodes[static_cast<std::size_t>(i)].edges)
      if (e.child >= 0) worst = std::max(worst, 1 + rec(e.child));
    return d = worst;
  };
  return rec(0);
}

void StrategyTree::validate(const Graph& g) const {
  if (k < 1) throw std::invalid_argument("strategy tree: k must be >= 1");
  if (nodes.empty()) throw std::invalid_argument("strategy tree: no nodes");
  for (const auto& node : nodes) {
    if (node.probes.empty() || static_cast<int>(node.probes.size()) > k)
      throw std::invalid_argument("strategy tree: bad probe list size");
    if (!std::is_sorted(node.probes.begin(), node.probes.end()))
      throw std::invalid_argument("strategy tree: probes not ascending");
    for (int p : node.probes)
      if (p < 0 || p >= g.vertex_count())
        throw std::invalid_argument("strategy tree: probe out of range");
    for (std::size_t i = 0; i < node.edges.size(); ++i) {
      const auto& e = node.edges[i];
      if (e.key.size() != node.probes.size())
        throw std::invalid_argument("strategy tree: key/probe size mismatch");
      if (i > 0 && !(node.edges[i - 1].key < e.key))
        throw std::invalid_argument("strategy tree: edges unsorted or duplicate");
      if ((e.win_vertex >= 0) == (e.child >= 0))
        throw std::invalid_argument("strategy tree: edge must be win xor child");
      if (e.win_vertex >= g.vertex_count() ||
          e.child >= static_cast<int>(nodes.size()))
        throw std::invalid_argument("strategy tree: edge target out of range");
    }
  }
}

std::string StrategyTree::serialize(const Graph& g) const {
  std::ostringstream out;
  out << "strategy k " << k << " nodes " << nodes.size() << "\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << "node " << i << " probes";
    for (int p : nodes[i].probes) out << " " << g.label(p);
    out << "\n";
    for (const auto& e : nodes[i].edges) {
      out << "edge " << i;
      for (int d : e.key) out << " " << d;
      if (e.win_vertex >= 0)
        out << " win " << g.label(e.win_vertex) << "\n";
      else
        out << " node " << e.child << "\n";
    }
  }
  return out.str();
}

StrategyTree StrategyTree::parse(const std::string& text, const Graph& g) {
  std::istringstream in(text);
  std::string line;
  StrategyTree tree;
  int node_count = -1;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("strategy line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    if (tok == "strategy") {
      std::string kw1, kw2;
      if (!(ls >> kw1 >> tree.k >> kw2 >> node_count) || kw1 != "k" ||
          kw2 != "nodes" || tree.k < 1 || node_count < 1)
        fail("bad header");
      tree.nodes.resize(static_cast<std::size_t>(node_count));
    } else if (tok == "node") {
      int idx;
      std::string kw;
      if (node_count < 0 || !(ls >> idx >> kw) || kw != "probes" || idx < 0 ||
          idx >= node_count)
        fail("bad node line");
      std::string label;
      while (ls >> label)
        tree.nodes[static_cast<std::size_t>(idx)].probes.push_back(g.vertex(label));
    } else if (tok == "edge") {
      int idx;
      if (node_count < 0 || !(ls >> idx) || idx < 0 || idx >= node_count)
        fail("bad edge line");
      auto& node = tree.nodes[static_cast<std::size_t>(idx)];
      Edge e;
      for (std::size_t i = 0; i < node.probes.size(); ++i) {
        int d;
        if (!(ls >> d)) fail("short distance key");
        e.key.push_back(d);
      }
      std::string kind, arg;
      if (!(ls >> kind >> arg)) fail("bad edge target");
      if (kind == "win")
        e.win_vertex = g.vertex(arg);
      else if (kind == "node")
        e.child = std::stoi(arg);
      else
        fail("unknown edge target '" + kind + "'");
      node.edges.push_back(std::move(e));
    } else {
      fail("unknown record '" + tok + "'");
    }
  }
  if (node_count < 0) throw ParseError("strategy: missing header");
  try {
    tree.validate(g);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return tree;
}

}  // namespace rloc
