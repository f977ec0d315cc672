#pragma once

// How the two doublings act on each other: the coaction phi of D~ on D, the
// products star (on V) and sharp (on V~), the action psi of V~ on V, the map
// xi, and the exhaustive law verifier.
//
// star, sharp and psi are the transposes of Δ|V, Γ|V~ and of
//   rho(t,C) = Σ_{S ⊆ edges(t)∖C} (t,S) ⊗ (t/S, C)
// with respect to the basis of marked-tree classes: the coefficient of z in
// x⊛y is the coefficient of x⊗y in Δ(z), and likewise for the others. On a
// concrete tree the matching terms are found by lifting cuts or subsets from
// the trunk or quotient back to t.

#include <optional>
#include <string>
#include <vector>

#include "treebialg/cut_contract.hpp"
#include "treebialg/doubling.hpp"
#include "treebialg/law_report.hpp"

namespace treebialg {

/// phi(t,C) = Σ_{S′ ⊆ edges(P^C(t))} (t,S′)_W ⊗ (t/S′, C)_V, extended
/// multiplicatively; phi(1) = 1⊗1.
TensorElement phi(const Monomial& m);
TensorElement phi(const Element& x);

/// Products of single pairs (zero when nothing matches) and their bilinear
/// extensions to combinations of single pairs.
Element star(const Monomial& a, const Monomial& b);
Element sharp(const Monomial& a, const Monomial& b);
Element psi(const Monomial& a, const Monomial& b);  // a in V~, b in V
Element star(const Element& a, const Element& b);
Element sharp(const Element& a, const Element& b);
Element psi(const Element& a, const Element& b);

/// xi on one concrete tree t′. `s1` and `s2` are the two W marks, `trunk_cut`
/// is the cut whose trunk carries `s2`, and `vcut` is the V cut already
/// raised to t′. Empty when a condition fails.
std::optional<Tensor> xi_aligned(const RootedTree& t, EdgeSet s1, EdgeSet trunk_cut, EdgeSet s2,
                                 EdgeSet vcut);

/// xi on classes: (t′,S′)_W, (t″,S″)_W, (u,C_u)_V. The identifications are
/// canonical isomorphisms; the first admissible cut of t′ in ascending
/// (marked key, edge bits) order that satisfies everything is used.
TensorElement xi_search(const Monomial& a, const Monomial& b, const Monomial& c);

/// (xi⊗id)∘τ23∘(phi⊗phi)∘Δ on a single V pair, with xi aligned on t.
TensorElement xi_diagram_rhs(const Monomial& v_pair);

/// Names accepted by verify_law, in display order. The first twelve form "all".
const std::vector<std::string>& law_names();
const std::vector<std::string>& default_laws();
bool is_known_law(const std::string& name);

/// Exhaustive check of one law over every basis element (or triple of basis
/// elements) built from trees with at most `max_vertices` vertices.
/// Throws std::invalid_argument on an unknown name.
LawReport verify_law(const std::string& name, int max_vertices, int jobs = 1);

/// xi-diagram on products of two pairs from trees up to `max_vertices`.
LawReport check_xi_diagram_products(int max_vertices, int jobs = 1);

/// Diagnostic: whether search-mode xi reproduces aligned xi on every triple
/// met while expanding the xi-diagram.
LawReport check_xi_search_agreement(int max_vertices, int jobs = 1);

}  // namespace treebialg
