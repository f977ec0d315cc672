#pragma once

// Admissible cuts (pruning / trunk) and covering subforests (components /
// contraction). Everything here works on concrete tree instances and edge
// subsets of them; classes only appear once results are canonicalized.

#include <vector>

#include "treebialg/forest.hpp"

namespace treebialg {

/// A connected piece of a host tree, re-indexed so that parent(w) < w.
/// `origin[w]` is the host vertex of local vertex w, and local edge w is host
/// edge origin[w].
struct Embedded {
  RootedTree tree;
  std::vector<int> origin;
};

EdgeSet to_host(const Embedded& piece, EdgeSet local);
/// Host edges lying inside the piece, in local indices; other edges are dropped.
EdgeSet to_local(const Embedded& piece, EdgeSet host);

/// Every admissible cut of `t`, the empty cut included, in a fixed order.
std::vector<EdgeSet> admissible_cuts(const RootedTree& t);

/// Edges lying strictly above some edge of `cut`: the edges of its pruning.
EdgeSet edges_above(const RootedTree& t, EdgeSet cut);

struct PruneTrunk {
  std::vector<Embedded> pruning;  // one subtree per cut edge, ascending by edge
  Embedded trunk;                 // the component of the root
};

/// Throws std::invalid_argument when `cut` is not admissible.
PruneTrunk prune_trunk(const RootedTree& t, EdgeSet cut);

/// Embedded subtree rooted at vertex v (all descendants of v).
Embedded subtree_at(const RootedTree& t, int v);

/// Connected components of the spanning subgraph with edge set `s`; every
/// vertex of `t` belongs to exactly one component. Ordered by top vertex.
std::vector<Embedded> subforest(const RootedTree& t, EdgeSet s);

/// Bijection between the edges of t/S and the edges of t outside S.
class EdgeMap {
 public:
  EdgeMap() = default;
  EdgeMap(std::vector<int> to_original, std::vector<int> to_quotient)
      : to_original_(std::move(to_original)), to_quotient_(std::move(to_quotient)) {}

  int original(int quotient_edge) const { return to_original_[static_cast<std::size_t>(quotient_edge)]; }
  /// -1 for contracted edges (and the root).
  int quotient(int original_edge) const { return to_quotient_[static_cast<std::size_t>(original_edge)]; }
  std::size_t quotient_size() const { return to_original_.size(); }

 private:
  std::vector<int> to_original_;  // indexed by quotient vertex
  std::vector<int> to_quotient_;  // indexed by original vertex
};

struct Contraction {
  RootedTree quotient;
  EdgeMap edge_map;
  std::vector<int> vertex_class;  // original vertex -> quotient vertex
};

Contraction contract(const RootedTree& t, EdgeSet s);

/// Image of quotient edges in the original tree.
EdgeSet raise_edges(const EdgeMap& map, EdgeSet quotient_edges);
/// Image of uncontracted original edges in the quotient; throws on a contracted edge.
EdgeSet lower_edges(const EdgeMap& map, EdgeSet original_edges);

/// Representatives of the distinct marked classes on `t`, ascending by key.
/// V: admissible cuts; W: arbitrary edge subsets.
std::vector<EdgeSet> enumerate_marks(const RootedTree& t, Flavor flavor);

}  // namespace treebialg
