#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bperm/expression.hpp"
#include "bperm/limits.hpp"
#include "bperm/signed_sets.hpp"

namespace bperm {

// A bipartite graph with m left vertices and labeled right vertices.  For
// octant graphs the right labels are {0,...,n} (label 0 standing for the zero
// vector, so the restricted simplices become coordinate simplices one
// dimension up); generic graphs may use any labels.
struct BipartiteGraph {
  std::vector<int> right_labels;           // sorted, distinct
  std::vector<std::vector<int>> neighbors; // per left vertex, sorted labels

  int left_count() const { return static_cast<int>(neighbors.size()); }
  int right_count() const { return static_cast<int>(right_labels.size()); }
  int right_index(int label) const;        // errors if the label is missing
  int edge_count() const;
};

// The graph of an octant restriction: one left vertex per term, neighbors
// N(l_i) = {0} ∪ ||S_i ∩ T||, rights {0,...,n}.
BipartiteGraph graph_of_octant(const MinkowskiExpression& p, const OctantLabel& t);

// The projection carrying a point of the lifted coordinate space {0,...,n}
// back into octant T: coordinate |i| of the output is x_{|i|} times the sign
// of i in T (the 0-th input coordinate is absorbed by the zero vector).
LatticePoint project_phi(const OctantLabel& t, std::span<const std::int64_t> x);

// Degree-minus-one vectors over left (resp. right) vertices in index order.
std::vector<int> left_degree(const BipartiteGraph& g);
std::vector<int> right_degree(const BipartiteGraph& g);

// Whether a square bipartite graph (left count == right count) has a perfect
// matching; decided by augmenting paths.
bool perfect_matching_exists(const BipartiteGraph& g);

// The degree-based characterization tested against the matching decision:
// every vertex has degree >= 1 and no vertex has two or more neighbors of
// degree 1.
bool matching_conditions(const BipartiteGraph& g);

// For an acyclic graph: all distinct sums  sum_i e_{j_i}  over transversal
// choices j_i in N(l_i), as vectors indexed by right_labels order.
std::vector<std::vector<std::int64_t>> forest_lattice_points(const BipartiteGraph& g,
                                                             const Limits& limits = {});

}  // namespace bperm
