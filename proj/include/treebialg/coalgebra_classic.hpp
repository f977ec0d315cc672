#pragma once

// The Connes–Kreimer coproduct on H (vertex grading), the contraction
// coproduct on H~ (edge grading), the quotient H' = H~/J, the coaction Phi of
// H~ on H, and the codistributivity check tying them together.

#include <cstddef>

#include "treebialg/free_module.hpp"
#include "treebialg/law_report.hpp"

namespace treebialg {

/// t⊗1 + Σ_{c ∈ Adm(t)} P^c(t)⊗R^c(t) on trees, extended multiplicatively.
TensorElement coproduct_ck(const Monomial& forest);
TensorElement coproduct_ck(const Element& x);

/// Σ_{S ⊆ edges(t)} subforest(t,S) ⊗ t/S on trees, extended multiplicatively.
TensorElement coproduct_contract(const Monomial& forest);
TensorElement coproduct_contract(const Element& x);

/// 1 on the empty forest, 0 elsewhere.
Integer counit_ck(const Monomial& forest);
/// 1 on edgeless forests (the unit included), 0 elsewhere.
Integer counit_contract(const Monomial& forest);

/// Deletes every single-vertex factor.
Monomial quotient_hprime(const Monomial& forest);
Element quotient_hprime(const Element& x);
TensorElement quotient_hprime_at(const TensorElement& x, std::size_t pos);

/// Phi(1) = •⊗1 and Phi(f) = coproduct_contract(f) for nonempty forests.
TensorElement coaction_Phi(const Monomial& forest);

/// (Id⊗Δ_CK)∘Phi = m^{1,3}∘(Phi⊗Phi)∘Δ_CK on every tree up to the bound,
/// both sides projected to H' in the first tensor factor.
LawReport check_ckm_codistributivity(int max_vertices, int jobs = 1);

/// (Δ⊗id)Δ = (id⊗Δ)Δ on every forest with at most `max_vertices` vertices.
LawReport check_coassociativity_ck(int max_vertices, int jobs = 1);
LawReport check_coassociativity_contract(int max_vertices, int jobs = 1);

}  // namespace treebialg
