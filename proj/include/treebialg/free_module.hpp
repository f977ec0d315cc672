#pragma once

// Exact integer linear combinations over monomial keys and tensor tuples of
// them, with the structural maps used by the coproduct identities.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "treebialg/forest.hpp"

namespace treebialg {

/// Finitely supported map from keys to nonzero integers.
template <class Key>
class LinComb {
 public:
  using Terms = std::map<Key, Integer>;

  LinComb() = default;

  static LinComb basis(Key key, Integer coeff = 1) {
    LinComb out;
    out.add(std::move(key), std::move(coeff));
    return out;
  }

  void add(const Key& key, const Integer& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Integer coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Integer{0} : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const Terms& terms() const { return terms_; }

  /// Sum of all coefficients (the term count with multiplicity).
  Integer total() const {
    Integer n = 0;
    for (const auto& [k, c] : terms_) n += c;
    return n;
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Integer& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Integer& s, LinComb a) { return a *= s; }

  bool operator==(const LinComb&) const = default;

 private:
  Terms terms_;
};

using Tensor = std::vector<Monomial>;
using Element = LinComb<Monomial>;
using TensorElement = LinComb<Tensor>;

/// Sum of coeff * f(key) over the support of x.
template <class Key, class F>
auto extend_linearly(F&& f, const LinComb<Key>& x) {
  using Out = decltype(f(std::declval<const Key&>()));
  Out out;
  for (const auto& [key, c] : x) {
    Out image = f(key);
    image *= c;
    out += image;
  }
  return out;
}

TensorElement as_tensor(const Element& x);

/// a ⊗ b: concatenation of tensor tuples, bilinear.
TensorElement otimes(const TensorElement& a, const TensorElement& b);

/// Componentwise product in the tensor product of commutative algebras.
Tensor operator*(const Tensor& a, const Tensor& b);
TensorElement multiply(const TensorElement& a, const TensorElement& b);
Element multiply(const Element& a, const Element& b);

/// Replaces component `pos` of every tensor by f(component), which returns a
/// combination of tensors that is spliced in place.
template <class F>
TensorElement apply_at(const TensorElement& x, std::size_t pos, F&& f) {
  TensorElement out;
  for (const auto& [key, c] : x) {
    if (pos >= key.size()) throw std::invalid_argument("tensor position out of range");
    const TensorElement image = f(key[pos]);
    for (const auto& [part, d] : image) {
      Tensor t;
      t.reserve(key.size() + part.size() - 1);
      t.insert(t.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(pos));
      t.insert(t.end(), part.begin(), part.end());
      t.insert(t.end(), key.begin() + static_cast<std::ptrdiff_t>(pos) + 1, key.end());
      out.add(t, c * d);
    }
  }
  return out;
}

/// Extends an atom-level map multiplicatively over the factors of a monomial.
/// `unit` is the image of the empty monomial.
template <class F>
TensorElement multiplicative(const Monomial& m, const Tensor& unit, F&& atom_map) {
  TensorElement acc = TensorElement::basis(unit);
  for (const auto& key : m.factors) acc = multiply(acc, atom_map(key));
  return acc;
}

/// a⊗b⊗c⊗d ↦ a⊗c⊗b⊗d. Throws unless every tensor has four components.
TensorElement tau23(const TensorElement& x);

/// a⊗b⊗c⊗d ↦ ac⊗b⊗d for forest components.
TensorElement m13(const TensorElement& x);

std::string to_string(const Tensor& t);

/// Terms ascending bytewise by serialized key, e.g. "1·([] ⊗ []) + 2·(...)".
std::string render(const Element& x);
std::string render(const TensorElement& x);

/// {"terms":[{"coeff":k,"key":[component,...]},...]} with terms in render order.
nlohmann::json to_json(const TensorElement& x);
nlohmann::json to_json(const Element& x);
TensorElement tensor_from_json(const nlohmann::json& j);

}  // namespace treebialg
