#include "bperm/bridge.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "bperm/errors.hpp"

namespace bperm {

int BipartiteGraph::right_index(int label) const {
  auto it = std::lower_bound(right_labels.begin(), right_labels.end(), label);
  if (it == right_labels.end() || *it != label)
    fail(Errc::out_of_range, "right label " + std::to_string(label) + " not in graph");
  return static_cast<int>(it - right_labels.begin());
}

int BipartiteGraph::edge_count() const {
  int total = 0;
  for (const auto& nb : neighbors) total += static_cast<int>(nb.size());
  return total;
}

BipartiteGraph graph_of_octant(const MinkowskiExpression& p, const OctantLabel& t) {
  OctantRestriction r = restrict(p, t);  // raises on dimension mismatch
  BipartiteGraph g;
  g.right_labels.resize(p.n() + 1);
  for (int i = 0; i <= p.n(); ++i) g.right_labels[i] = i;
  g.neighbors.reserve(r.terms().size());
  for (const auto& mags : r.carriers()) {
    std::vector<int> nb;
    nb.reserve(mags.size() + 1);
    nb.push_back(0);
    nb.insert(nb.end(), mags.begin(), mags.end());
    g.neighbors.push_back(std::move(nb));
  }
  return g;
}

LatticePoint project_phi(const OctantLabel& t, std::span<const std::int64_t> x) {
  const int n = t.n();
  if (static_cast<int>(x.size()) != n + 1)
    fail(Errc::length_mismatch, "input has length " + std::to_string(x.size()) +
                                    ", expected n+1 = " + std::to_string(n + 1));
  LatticePoint out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = t.sign(i) * x[i];
  return out;
}

std::vector<int> left_degree(const BipartiteGraph& g) {
  std::vector<int> out;
  out.reserve(g.neighbors.size());
  for (const auto& nb : g.neighbors) out.push_back(static_cast<int>(nb.size()) - 1);
  return out;
}

std::vector<int> right_degree(const BipartiteGraph& g) {
  std::vector<int> deg(g.right_count(), 0);
  for (const auto& nb : g.neighbors)
    for (int label : nb) ++deg[g.right_index(label)];
  for (int& d : deg) --d;
  return deg;
}

namespace {

void require_square(const BipartiteGraph& g) {
  if (g.left_count() != g.right_count())
    fail(Errc::not_square, "graph has " + std::to_string(g.left_count()) + " left and " +
                               std::to_string(g.right_count()) + " right vertices");
}

// One augmenting-path pass of the classic matching algorithm.
bool augment(const BipartiteGraph& g, int left,
             std::vector<std::vector<int>>& adj, std::vector<int>& match_right,
             std::vector<char>& visited) {
  for (int r : adj[left]) {
    if (visited[r]) continue;
    visited[r] = 1;
    if (match_right[r] < 0 || augment(g, match_right[r], adj, match_right, visited)) {
      match_right[r] = left;
      return true;
    }
  }
  return false;
}

}  // namespace

bool perfect_matching_exists(const BipartiteGraph& g) {
  require_square(g);
  std::vector<std::vector<int>> adj(g.left_count());
  for (int i = 0; i < g.left_count(); ++i)
    for (int label : g.neighbors[i]) adj[i].push_back(g.right_index(label));
  std::vector<int> match_right(g.right_count(), -1);
  for (int i = 0; i < g.left_count(); ++i) {
    std::vector<char> visited(g.right_count(), 0);
    if (!augment(g, i, adj, match_right, visited)) return false;
  }
  return true;
}

bool matching_conditions(const BipartiteGraph& g) {
  require_square(g);
  std::vector<int> ld = left_degree(g);
  std::vector<int> rd = right_degree(g);
  // (1) every vertex is matched to something at all
  for (int d : ld)
    if (d < 0) return false;
  for (int d : rd)
    if (d < 0) return false;
  // (2) no vertex is the sole hope of two different degree-one vertices
  std::vector<int> lone_left_hits(g.right_count(), 0);
  std::vector<int> lone_right_hits(g.left_count(), 0);
  for (int i = 0; i < g.left_count(); ++i)
    if (ld[i] == 0) ++lone_left_hits[g.right_index(g.neighbors[i][0])];
  for (int i = 0; i < g.left_count(); ++i)
    for (int label : g.neighbors[i]) {
      int r = g.right_index(label);
      if (rd[r] == 0) ++lone_right_hits[i];
    }
  for (int hits : lone_left_hits)
    if (hits >= 2) return false;
  for (int hits : lone_right_hits)
    if (hits >= 2) return false;
  return true;
}

std::vector<std::vector<std::int64_t>> forest_lattice_points(const BipartiteGraph& g,
                                                             const Limits& limits) {
  // Acyclicity check by union-find over left + right vertices.
  const int m = g.left_count();
  const int r = g.right_count();
  std::vector<int> parent(m + r);
  for (int i = 0; i < m + r; ++i) parent[i] = i;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int i = 0; i < m; ++i)
    for (int label : g.neighbors[i]) {
      int a = find(i), b = find(m + g.right_index(label));
      if (a == b) fail(Errc::not_forest, "graph contains a cycle");
      parent[a] = b;
    }

  std::int64_t products = 1;
  for (const auto& nb : g.neighbors) {
    if (nb.empty()) return {};  // no transversal can choose from an empty set
    products *= static_cast<std::int64_t>(nb.size());
    if (products > limits.max_forest_products)
      fail(Errc::box_too_large, "transversal product exceeds guard");
  }

  std::set<std::vector<std::int64_t>> sums;
  std::vector<std::int64_t> point(r, 0);
  std::vector<std::size_t> choice(m, 0);
  while (true) {
    for (int i = 0; i < m; ++i) ++point[g.right_index(g.neighbors[i][choice[i]])];
    sums.insert(point);
    std::fill(point.begin(), point.end(), 0);
    int k = m - 1;
    while (k >= 0 && ++choice[k] == g.neighbors[k].size()) choice[k--] = 0;
    if (k < 0) break;
  }
  return std::vector<std::vector<std::int64_t>>(sums.begin(), sums.end());
}

}  // namespace bperm
