#pragma once

// Rooted trees, forests and edge-marked trees: storage, canonical text
// encoding, parsing and enumeration.
//
// Canonical grammar (bit-exact):
//   tree   := ('*')? '[' tree* ']'      '*' only on non-root positions
//   forest := tree*
// Every sibling list is sorted ascending bytewise by the full encoding of its
// members (marks included). A forest is the ascending concatenation of its
// trees; the empty forest (the unit) is written "1".

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "treebialg/edge_set.hpp"

namespace treebialg {

using Integer = boost::multiprecision::cpp_int;

inline constexpr int kMaxVertices = 64;

/// A finite rooted tree on vertices 0..n-1 with root 0 and parent(v) < v.
/// The order of children is a storage artifact.
class RootedTree {
 public:
  RootedTree();  // single vertex

  /// `parents[0]` must be -1 and `parents[v] < v` for every other vertex.
  static RootedTree from_parents(std::vector<int> parents);

  int vertex_count() const { return static_cast<int>(parent_.size()); }
  int edge_count() const { return vertex_count() - 1; }
  int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
  std::span<const int> children(int v) const { return children_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& parents() const { return parent_; }

  EdgeSet edges() const;

 private:
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
};

/// New root with the given trees as its children (the grafting operator).
RootedTree graft(std::span<const RootedTree> subtrees);

enum class Flavor { V, W };

/// A tree with a distinguished edge subset. Flavor V requires the marks to form
/// an admissible cut; flavor W accepts any subset. The flavor is carried beside
/// the encoding, never inside it.
struct MarkedTree {
  RootedTree tree;
  EdgeSet marks;
};

bool is_admissible(const RootedTree& t, EdgeSet marks);

std::string canonical_key(const RootedTree& t, EdgeSet marks = {});
inline std::string canonical_key(const MarkedTree& m) { return canonical_key(m.tree, m.marks); }

/// Encoding of every rooted subtree, indexed by vertex.
std::vector<std::string> subtree_encodings(const RootedTree& t, EdgeSet marks = {});

/// Vertices in canonical preorder: siblings visited ascending by encoding,
/// ties between equal encodings broken by vertex index.
std::vector<int> canonical_order(const RootedTree& t, EdgeSet marks = {});

/// The isomorphism `from -> to` induced by the two canonical orders; entry v is
/// the image of vertex v. Throws std::invalid_argument when the marked trees
/// are not isomorphic.
std::vector<int> canonical_isomorphism(const RootedTree& from, EdgeSet from_marks,
                                       const RootedTree& to, EdgeSet to_marks);

/// Order of the group of root-preserving automorphisms that also preserve the marks.
Integer automorphism_count(const RootedTree& t, EdgeSet marks = {});

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses a single (possibly marked) tree; the whole input must be consumed.
MarkedTree parse_marked_tree(std::string_view text);

/// Parses a forest of unmarked trees. "" and "1" denote the unit.
std::vector<RootedTree> parse_forest(std::string_view text);

/// Parses a forest of marked trees; with flavor V every tree's marks must be
/// an admissible cut.
std::vector<MarkedTree> parse_marked_forest(std::string_view text, Flavor flavor);

/// All rooted trees with `n` vertices, ascending by canonical key.
std::vector<RootedTree> enumerate_trees(int n);

/// Cached parse of a canonical (marked) tree key. Thread-safe (per-thread cache).
const MarkedTree& tree_from_key(const std::string& key);

// ---------------------------------------------------------------------------
// Monomials: the basis keys of H, D = S(V) and D~ = S(V~).

enum class Sort { Forest, V, W };

const char* sort_tag(Sort s);  // "", "V:", "W:"
inline Sort sort_of(Flavor f) { return f == Flavor::V ? Sort::V : Sort::W; }

/// A commutative monomial: a multiset of canonical tree keys of one sort.
/// Sort::Forest holds plain trees; V and W hold marked trees (pairs).
struct Monomial {
  Sort sort = Sort::Forest;
  std::vector<std::string> factors;  // sorted ascending

  Monomial() = default;
  Monomial(Sort s, std::vector<std::string> keys);

  static Monomial unit(Sort s) { return Monomial{s, {}}; }
  static Monomial atom(Sort s, std::string key) { return Monomial{s, {std::move(key)}}; }

  bool is_unit() const { return factors.empty(); }
  bool is_atom() const { return factors.size() == 1; }

  auto operator<=>(const Monomial&) const = default;
};

Monomial make_forest(std::span<const RootedTree> trees);
Monomial make_pairs(Flavor flavor, std::span<const MarkedTree> pairs);

/// Commutative product (multiset union). Throws on sort mismatch.
Monomial operator*(const Monomial& a, const Monomial& b);

inline Monomial forest_product(const Monomial& a, const Monomial& b) { return a * b; }

/// Every forest (the unit included) whose trees have at most `max_total` vertices in total.
std::vector<Monomial> enumerate_forests(int max_total);

int vertex_degree(const Monomial& forest);
int edge_degree(const Monomial& forest);

std::string to_string(const Monomial& m);

/// Inverse of to_string: "V:" / "W:" prefix selects the pair sorts.
Monomial parse_monomial(std::string_view text);

}  // namespace treebialg
