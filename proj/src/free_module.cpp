#include "treebialg/free_module.hpp"

#include <algorithm>
#include <limits>

namespace treebialg {

TensorElement as_tensor(const Element& x) {
  TensorElement out;
  for (const auto& [m, c] : x) out.add(Tensor{m}, c);
  return out;
}

TensorElement otimes(const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      Tensor t = ka;
      t.insert(t.end(), kb.begin(), kb.end());
      out.add(t, ca * cb);
    }
  return out;
}

Tensor operator*(const Tensor& a, const Tensor& b) {
  if (a.size() != b.size()) throw std::invalid_argument("product of tensors of different arity");
  Tensor out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
  return out;
}

TensorElement multiply(const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out.add(ka * kb, ca * cb);
  return out;
}

Element multiply(const Element& a, const Element& b) {
  Element out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out.add(ka * kb, ca * cb);
  return out;
}

TensorElement tau23(const TensorElement& x) {
  TensorElement out;
  for (const auto& [k, c] : x) {
    if (k.size() != 4) throw std::invalid_argument("tau23 needs 4-tensors");
    out.add(Tensor{k[0], k[2], k[1], k[3]}, c);
  }
  return out;
}

TensorElement m13(const TensorElement& x) {
  TensorElement out;
  for (const auto& [k, c] : x) {
    if (k.size() != 4) throw std::invalid_argument("m13 needs 4-tensors");
    for (const auto& m : k)
      if (m.sort != Sort::Forest) throw std::invalid_argument("m13 acts on forest tensors");
    out.add(Tensor{k[0] * k[2], k[1], k[3]}, c);
  }
  return out;
}

std::string to_string(const Tensor& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += " ⊗ ";
    out += to_string(t[i]);
  }
  return out;
}

namespace {

template <class Key, class ToString>
std::vector<std::pair<std::string, Integer>> sorted_terms(const LinComb<Key>& x, ToString&& str) {
  std::vector<std::pair<std::string, Integer>> terms;
  terms.reserve(x.size());
  for (const auto& [k, c] : x) terms.emplace_back(str(k), c);
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return terms;
}

std::string render_terms(const std::vector<std::pair<std::string, Integer>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [key, c] = terms[i];
    if (i == 0) {
      out += c.str();
    } else {
      out += c < 0 ? " - " : " + ";
      out += (c < 0 ? Integer{-c} : c).str();
    }
    out += "·(" + key + ")";
  }
  return out;
}

nlohmann::json coeff_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

}  // namespace

std::string render(const Element& x) {
  return render_terms(sorted_terms(x, [](const Monomial& m) { return to_string(m); }));
}

std::string render(const TensorElement& x) {
  return render_terms(sorted_terms(x, [](const Tensor& t) { return to_string(t); }));
}

nlohmann::json to_json(const TensorElement& x) {
  std::vector<std::pair<std::string, const Tensor*>> order;
  for (const auto& [k, c] : x) order.emplace_back(to_string(k), &k);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [s, k] : order) {
    nlohmann::json key = nlohmann::json::array();
    for (const auto& m : *k) key.push_back(to_string(m));
    terms.push_back({{"coeff", coeff_json(x.coeff(*k))}, {"key", key}});
  }
  return {{"terms", terms}};
}

nlohmann::json to_json(const Element& x) { return to_json(as_tensor(x)); }

TensorElement tensor_from_json(const nlohmann::json& j) {
  TensorElement out;
  for (const auto& term : j.at("terms")) {
    Tensor key;
    for (const auto& comp : term.at("key")) key.push_back(parse_monomial(comp.get<std::string>()));
    const auto& c = term.at("coeff");
    out.add(key, c.is_string() ? Integer{c.get<std::string>()} : Integer{c.get<std::int64_t>()});
  }
  return out;
}

}  // namespace treebialg
