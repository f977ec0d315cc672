#include "treebialg/coalgebra_classic.hpp"

#include "treebialg/cut_contract.hpp"

namespace treebialg {

namespace {

const Tensor kForestUnit2{Monomial::unit(Sort::Forest), Monomial::unit(Sort::Forest)};

Monomial forest_of(const std::vector<Embedded>& pieces) {
  std::vector<std::string> keys;
  keys.reserve(pieces.size());
  for (const auto& p : pieces) keys.push_back(canonical_key(p.tree));
  return Monomial{Sort::Forest, std::move(keys)};
}

Monomial tree_monomial(const RootedTree& t) { return Monomial::atom(Sort::Forest, canonical_key(t)); }

TensorElement ck_tree(const std::string& key) {
  const RootedTree& t = tree_from_key(key).tree;
  TensorElement out = TensorElement::basis({Monomial::atom(Sort::Forest, key), Monomial::unit(Sort::Forest)});
  for (EdgeSet c : admissible_cuts(t)) {
    const PruneTrunk pt = prune_trunk(t, c);
    out.add({forest_of(pt.pruning), tree_monomial(pt.trunk.tree)}, 1);
  }
  return out;
}

TensorElement contract_tree(const std::string& key) {
  const RootedTree& t = tree_from_key(key).tree;
  TensorElement out;
  for_each_subset(t.edges(), [&](EdgeSet s) {
    out.add({forest_of(subforest(t, s)), tree_monomial(contract(t, s).quotient)}, 1);
  });
  return out;
}

void require_forest(const Monomial& m) {
  if (m.sort != Sort::Forest) throw std::invalid_argument("expected a forest, got " + to_string(m));
}

}  // namespace

TensorElement coproduct_ck(const Monomial& forest) {
  require_forest(forest);
  return multiplicative(forest, kForestUnit2, ck_tree);
}

TensorElement coproduct_ck(const Element& x) {
  return extend_linearly([](const Monomial& m) { return coproduct_ck(m); }, x);
}

TensorElement coproduct_contract(const Monomial& forest) {
  require_forest(forest);
  return multiplicative(forest, kForestUnit2, contract_tree);
}

TensorElement coproduct_contract(const Element& x) {
  return extend_linearly([](const Monomial& m) { return coproduct_contract(m); }, x);
}

Integer counit_ck(const Monomial& forest) {
  require_forest(forest);
  return forest.is_unit() ? 1 : 0;
}

Integer counit_contract(const Monomial& forest) {
  require_forest(forest);
  return edge_degree(forest) == 0 ? 1 : 0;
}

Monomial quotient_hprime(const Monomial& forest) {
  require_forest(forest);
  std::vector<std::string> kept;
  for (const auto& k : forest.factors)
    if (k != "[]") kept.push_back(k);
  return Monomial{Sort::Forest, std::move(kept)};
}

Element quotient_hprime(const Element& x) {
  Element out;
  for (const auto& [m, c] : x) out.add(quotient_hprime(m), c);
  return out;
}

TensorElement quotient_hprime_at(const TensorElement& x, std::size_t pos) {
  TensorElement out;
  for (const auto& [k, c] : x) {
    if (pos >= k.size()) throw std::invalid_argument("tensor position out of range");
    Tensor t = k;
    t[pos] = quotient_hprime(t[pos]);
    out.add(t, c);
  }
  return out;
}

TensorElement coaction_Phi(const Monomial& forest) {
  require_forest(forest);
  if (forest.is_unit())
    return TensorElement::basis({Monomial::atom(Sort::Forest, "[]"), Monomial::unit(Sort::Forest)});
  return coproduct_contract(forest);
}

LawReport check_ckm_codistributivity(int max_vertices, int jobs) {
  std::vector<std::string> trees;
  for (int n = 1; n <= max_vertices; ++n)
    for (const auto& t : enumerate_trees(n)) trees.push_back(canonical_key(t));
  auto Phi = [](const Monomial& m) { return coaction_Phi(m); };
  auto Dck = [](const Monomial& m) { return coproduct_ck(m); };
  return run_law("ckm-codistributivity", max_vertices, trees.size(), jobs, [&](std::size_t i) {
    const Monomial t = Monomial::atom(Sort::Forest, trees[i]);
    const TensorElement lhs = quotient_hprime_at(apply_at(coaction_Phi(t), 1, Dck), 0);
    const TensorElement split = apply_at(apply_at(coproduct_ck(t), 0, Phi), 2, Phi);
    const TensorElement rhs = quotient_hprime_at(m13(split), 0);
    return compare_sides(trees[i], lhs, rhs);
  });
}

namespace {

template <class Coproduct>
LawReport coassociativity(std::string law, int max_vertices, int jobs, Coproduct delta) {
  const auto forests = enumerate_forests(max_vertices);
  return run_law(std::move(law), max_vertices, forests.size(), jobs, [&](std::size_t i) {
    const TensorElement d = delta(forests[i]);
    return compare_sides(to_string(forests[i]), apply_at(d, 0, delta), apply_at(d, 1, delta));
  });
}

}  // namespace

LawReport check_coassociativity_ck(int max_vertices, int jobs) {
  return coassociativity("coassoc-CK", max_vertices, jobs, [](const Monomial& m) { return coproduct_ck(m); });
}

LawReport check_coassociativity_contract(int max_vertices, int jobs) {
  return coassociativity("coassoc-Ht", max_vertices, jobs,
                         [](const Monomial& m) { return coproduct_contract(m); });
}

}  // namespace treebialg
