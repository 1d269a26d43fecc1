#include "rloc/families.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace rloc::families {

namespace {

std::vector<std::string> indexed_labels(const std::string& prefix, int n,
                                        int start = 0) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(start + i));
  return labels;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph complete(int n) {
  require(n >= 1, "complete: n must be >= 1");
  auto labels = indexed_labels("v", n);
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(labels[i], labels[j]);
  return Graph::from_edges(labels, edges);
}

Graph cycle(int n) {
  require(n >= 3, "cycle: n must be >= 3");
  auto labels = indexed_labels("v", n);
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(labels[i], labels[(i + 1) % n]);
  return Graph::from_edges(labels, edges);
}

Graph path(int n) {
  require(n >= 1, "path: n must be >= 1");
  auto labels = indexed_labels("v", n);
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(labels[i], labels[i + 1]);
  return Graph::from_edges(labels, edges);
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete_bipartite: sides must be >= 1");
  auto left = indexed_labels("a", a, 1);
  auto right = indexed_labels("b", b, 1);
  std::vector<std::string> labels = left;
  labels.insert(labels.end(), right.begin(), right.end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& u : left)
    for (const auto& v : right) edges.emplace_back(u, v);
  return Graph::from_edges(labels, edges);
}

Graph gnk(int n, int k) {
  require(1 <= k && k < n, "gnk: need 1 <= k < n");
  // k-subsets of {1..n} in lexicographic order, labelled "w{i,j,...}".
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    subsets.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  auto set_label = [](const std::vector<int>& s) {
    std::string out = "w{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(s[i]);
    }
    return out + "}";
  };
  std::vector<std::string> labels = indexed_labels("v", n, 1);
  for (const auto& s : subsets) labels.push_back(set_label(s));
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = a + 1; b < subsets.size(); ++b)
      edges.emplace_back(set_label(subsets[a]), set_label(subsets[b]));
  for (int i = 1; i <= n; ++i)
    for (const auto& s : subsets)
      if (!std::binary_search(s.begin(), s.end(), i))
        edges.emplace_back("v" + std::to_string(i), set_label(s));
  return Graph::from_edges(labels, edges);
}

Graph gn(int n) {
  require(n >= 1, "gn: n must be >= 1");
  // Words of length <= n that are empty or end in 1, by length then value:
  // exactly 2^n of them (1 + sum of 2^(l-1)).
  std::vector<std::string> short_words{""};
  for (int len = 1; len <= n; ++len)
    for (int bits = 0; bits < (1 << (len - 1)); ++bits) {
      std::string w;
      for (int p = len - 2; p >= 0; --p) w += ((bits >> p) & 1) ? '1' : '0';
      w += '1';
      short_words.push_back(w);
    }
  std::vector<std::string> full_words;
  for (int bits = 0; bits < (1 << n); ++bits) {
    std::string w;
    for (int p = n - 1; p >= 0; --p) w += ((bits >> p) & 1) ? '1' : '0';
    full_words.push_back(w);
  }
  std::vector<std::string> labels;
  for (const auto& w : short_words) labels.push_back("a" + w);
  for (const auto& w : full_words) labels.push_back("b" + w);
  for (const auto& w : full_words) labels.push_back("c" + w);
  for (const auto& w : short_words) labels.push_back("d" + w);
  auto is_prefix = [](const std::string& x, const std::string& y) {
    return x.size() <= y.size() && y.compare(0, x.size(), x) == 0;
  };
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& x : short_words)
    for (const auto& y : full_words) {
      if (is_prefix(x, y)) {
        edges.emplace_back("a" + x, "b" + y);
        edges.emplace_back("d" + x, "c" + y);
      }
    }
  for (const auto& x : full_words)
    for (const auto& y : full_words) edges.emplace_back("b" + x, "c" + y);
  return Graph::from_edges(labels, edges);
}

Graph tree_truncated(int delta, int depth) {
  require(delta >= 2, "tree_truncated: delta must be >= 2");
  require(depth >= 0, "tree_truncated: depth must be >= 0");
  double estimate = 1;
  double layer = 1;
  for (int d = 0; d < depth; ++d) {
    layer *= (d == 0) ? delta : (delta - 1);
    estimate += layer;
    require(estimate < 1e6, "tree_truncated: size exceeds desk scale");
  }
  std::vector<std::string> labels{"r"};
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> frontier{"r"};
  for (int d = 0; d < depth; ++d) {
    std::vector<std::string> next;
    for (const auto& parent : frontier) {
      int children = (parent == "r") ? delta : delta - 1;
      for (int c = 0; c < children; ++c) {
        std::string child =
            (parent == "r" ? "r" : parent) + std::to_string(c);
        labels.push_back(child);
        edges.emplace_back(parent, child);
        next.push_back(child);
      }
    }
    frontier = std::move(next);
  }
  return Graph::from_edges(labels, edges);
}

Graph random_connected_max_degree(int n, int delta, std::uint64_t seed) {
  require(n >= 1, "random graph: n must be >= 1");
  bool feasible = (n == 1) || (delta >= 2) || (n == 2 && delta >= 1);
  require(feasible, "random graph: infeasible (n, delta)");
  std::mt19937_64 rng(seed);
  auto labels = indexed_labels("v", n);
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<std::string, std::string>> edges;
  auto add_edge = [&](int u, int v) {
    edges.emplace_back(labels[static_cast<std::size_t>(u)],
                       labels[static_cast<std::size_t>(v)]);
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  };
  std::vector<std::vector<bool>> present(
      static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int v = 1; v < n; ++v) {
    std::vector<int> open;
    for (int u = 0; u < v; ++u)
      if (degree[static_cast<std::size_t>(u)] < delta) open.push_back(u);
    require(!open.empty(), "random graph: degree cap too tight for a tree");
    int u = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
    add_edge(u, v);
    present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    present[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
  }
  if (n >= 2) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int attempt = 0; attempt < n; ++attempt) {
      int u = pick(rng), v = pick(rng);
      if (u == v || present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
        continue;
      if (degree[static_cast<std::size_t>(u)] >= delta ||
          degree[static_cast<std::size_t>(v)] >= delta)
        continue;
      add_edge(u, v);
      present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
      present[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    }
  }
  return Graph::from_edges(labels, edges);
}

}  // namespace rloc::families
