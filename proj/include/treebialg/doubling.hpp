#pragma once

// The doubling bialgebras D = S(V) and D~ = S(V~).
//
// A basis element of V is a tree with an admissible cut C, standing for the
// couple (t, P^C(t)); a basis element of V~ is a tree with an arbitrary edge
// subset S, standing for (t, subforest(t,S)). Keys are canonical marked-tree
// encodings, so pairs are identified only up to isomorphism of the marked tree.

#include <vector>

#include "treebialg/free_module.hpp"

namespace treebialg {

/// Cuts C′ labelling the terms of Δ(t, C) on a concrete instance: admissible
/// cuts of t inside C ∪ edges(P^C(t)).
std::vector<EdgeSet> delta_cuts(const RootedTree& t, EdgeSet cut);

/// Δ(t,C) = Σ_{C′} (t,C′) ⊗ (R^{C′}(t), C ∩ R^{C′}(t)), extended multiplicatively.
TensorElement delta_D(const Monomial& m);
TensorElement delta_D(const Element& x);

/// Γ(t,S) = Σ_{S′ ⊆ S} (t,S′) ⊗ (t/S′, S∖S′ seen in t/S′), extended multiplicatively.
TensorElement gamma_Dtilde(const Monomial& m);
TensorElement gamma_Dtilde(const Element& x);

/// ε(t,·) = 1 iff nothing is marked; multiplicative.
Integer counit_pair(const Monomial& m);

/// (t,s)(t′,s′) = (tt′,ss′). Throws on flavor mismatch.
Monomial pair_product(const Monomial& a, const Monomial& b);

/// Second projection: V ↦ pruning P^C(t), V~ ↦ covering subforest; multiplicative.
Monomial project_P2(const Monomial& m);
Element project_P2(const Element& x);
/// P2 applied to every component.
TensorElement project_P2_all(const TensorElement& x);

/// V: vertices of the pruning. V~: number of marked edges.
int pair_degree(const Monomial& m);

/// Whether every factor carries marks legal for its flavor.
bool is_valid_pair(const Monomial& m);

/// Atomic pairs (t, marks) for every tree with exactly `n` vertices.
std::vector<Monomial> pairs_of_size(Flavor flavor, int n);
/// Atomic pairs for every tree with 1..max_vertices vertices.
std::vector<Monomial> basis_pairs(Flavor flavor, int max_vertices);

namespace detail {
void require_atom(const Monomial& m, Sort sort);
}

}  // namespace treebialg
