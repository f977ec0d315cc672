#include "treebialg/doubling.hpp"

#include <stdexcept>

#include "treebialg/cut_contract.hpp"

namespace treebialg {

namespace detail {

void require_atom(const Monomial& m, Sort sort) {
  if (m.sort != sort || !m.is_atom())
    throw std::invalid_argument(std::string("expected a single ") + sort_tag(sort) + " pair, got " +
                                to_string(m));
}

}  // namespace detail

namespace {

void require_sort(const Monomial& m, Sort sort) {
  if (m.sort != sort)
    throw std::invalid_argument(std::string("expected a ") + sort_tag(sort) + " monomial, got " + to_string(m));
}

TensorElement delta_atom(const std::string& key) {
  const MarkedTree& m = tree_from_key(key);
  TensorElement out;
  for (EdgeSet lower : delta_cuts(m.tree, m.marks)) {
    const Embedded trunk = prune_trunk(m.tree, lower).trunk;
    out.add({Monomial::atom(Sort::V, canonical_key(m.tree, lower)),
             Monomial::atom(Sort::V, canonical_key(trunk.tree, to_local(trunk, m.marks)))},
            1);
  }
  return out;
}

TensorElement gamma_atom(const std::string& key) {
  const MarkedTree& m = tree_from_key(key);
  TensorElement out;
  for_each_subset(m.marks, [&](EdgeSet inner) {
    const Contraction q = contract(m.tree, inner);
    out.add({Monomial::atom(Sort::W, canonical_key(m.tree, inner)),
             Monomial::atom(Sort::W, canonical_key(q.quotient, lower_edges(q.edge_map, m.marks - inner)))},
            1);
  });
  return out;
}

Monomial keys_of(const std::vector<Embedded>& pieces) {
  std::vector<std::string> keys;
  keys.reserve(pieces.size());
  for (const auto& p : pieces) keys.push_back(canonical_key(p.tree));
  return Monomial{Sort::Forest, std::move(keys)};
}

}  // namespace

std::vector<EdgeSet> delta_cuts(const RootedTree& t, EdgeSet cut) {
  const EdgeSet allowed = cut | edges_above(t, cut);
  std::vector<EdgeSet> out;
  for (EdgeSet c : admissible_cuts(t))
    if (c.subset_of(allowed)) out.push_back(c);
  return out;
}

TensorElement delta_D(const Monomial& m) {
  require_sort(m, Sort::V);
  return multiplicative(m, {Monomial::unit(Sort::V), Monomial::unit(Sort::V)}, delta_atom);
}

TensorElement delta_D(const Element& x) {
  return extend_linearly([](const Monomial& m) { return delta_D(m); }, x);
}

TensorElement gamma_Dtilde(const Monomial& m) {
  require_sort(m, Sort::W);
  return multiplicative(m, {Monomial::unit(Sort::W), Monomial::unit(Sort::W)}, gamma_atom);
}

TensorElement gamma_Dtilde(const Element& x) {
  return extend_linearly([](const Monomial& m) { return gamma_Dtilde(m); }, x);
}

Integer counit_pair(const Monomial& m) {
  if (m.sort == Sort::Forest) throw std::invalid_argument("counit_pair expects pairs");
  for (const auto& key : m.factors)
    if (key.find('*') != std::string::npos) return 0;
  return 1;
}

Monomial pair_product(const Monomial& a, const Monomial& b) {
  if (a.sort == Sort::Forest || b.sort == Sort::Forest) throw std::invalid_argument("pair_product expects pairs");
  return a * b;
}

Monomial project_P2(const Monomial& m) {
  if (m.sort == Sort::Forest) throw std::invalid_argument("project_P2 expects pairs");
  Monomial out = Monomial::unit(Sort::Forest);
  for (const auto& key : m.factors) {
    const MarkedTree& p = tree_from_key(key);
    out = out * keys_of(m.sort == Sort::V ? prune_trunk(p.tree, p.marks).pruning : subforest(p.tree, p.marks));
  }
  return out;
}

Element project_P2(const Element& x) {
  Element out;
  for (const auto& [m, c] : x) out.add(project_P2(m), c);
  return out;
}

TensorElement project_P2_all(const TensorElement& x) {
  TensorElement out;
  for (const auto& [k, c] : x) {
    Tensor t;
    t.reserve(k.size());
    for (const auto& m : k) t.push_back(project_P2(m));
    out.add(t, c);
  }
  return out;
}

int pair_degree(const Monomial& m) {
  if (m.sort == Sort::W) {
    int marks = 0;
    for (const auto& key : m.factors) marks += tree_from_key(key).marks.size();
    return marks;
  }
  return vertex_degree(project_P2(m));
}

bool is_valid_pair(const Monomial& m) {
  if (m.sort == Sort::Forest) return false;
  for (const auto& key : m.factors) {
    const MarkedTree& p = tree_from_key(key);
    if (canonical_key(p) != key) return false;
    if (m.sort == Sort::V && !is_admissible(p.tree, p.marks)) return false;
  }
  return true;
}

std::vector<Monomial> pairs_of_size(Flavor flavor, int n) {
  std::vector<Monomial> out;
  for (const auto& t : enumerate_trees(n))
    for (EdgeSet marks : enumerate_marks(t, flavor)) out.push_back(Monomial::atom(sort_of(flavor), canonical_key(t, marks)));
  return out;
}

std::vector<Monomial> basis_pairs(Flavor flavor, int max_vertices) {
  std::vector<Monomial> out;
  for (int n = 1; n <= max_vertices; ++n) {
    auto level = pairs_of_size(flavor, n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace treebialg
