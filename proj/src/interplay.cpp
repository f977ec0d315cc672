#include "treebialg/interplay.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "treebialg/coalgebra_classic.hpp"

namespace treebialg {

namespace {

Monomial pair_atom(Sort sort, const RootedTree& t, EdgeSet marks) {
  return Monomial::atom(sort, canonical_key(t, marks));
}

// Lifted representatives counted per class; turns the counts into transpose
// coefficients |Aut z| * count / |Aut x|.
class LiftTally {
 public:
  LiftTally(Sort sort, const MarkedTree& x) : sort_(sort), aut_x_(automorphism_count(x.tree, x.marks)) {}

  void add(const RootedTree& t, EdgeSet marks) {
    auto [it, fresh] = counts_.try_emplace(canonical_key(t, marks), 0);
    if (fresh) aut_.emplace(it->first, automorphism_count(t, marks));
    ++it->second;
  }

  Element result() const {
    Element out;
    for (const auto& [key, n] : counts_) {
      const Integer num = aut_.at(key) * n;
      if (num % aut_x_ != 0) throw std::logic_error("transpose coefficient is not integral for " + key);
      out.add(Monomial::atom(sort_, key), num / aut_x_);
    }
    return out;
  }

 private:
  Sort sort_;
  Integer aut_x_;
  std::map<std::string, long long> counts_;
  std::map<std::string, Integer> aut_;
};

bool has_marked_ancestor(const RootedTree& t, int edge, EdgeSet marks) {
  for (int w = t.parent(edge); w > 0; w = t.parent(w))
    if (marks.contains(w)) return true;
  return false;
}

TensorElement phi_atom(const std::string& key) {
  const MarkedTree& m = tree_from_key(key);
  TensorElement out;
  for_each_subset(edges_above(m.tree, m.marks), [&](EdgeSet s) {
    const Contraction q = contract(m.tree, s);
    out.add({pair_atom(Sort::W, m.tree, s), pair_atom(Sort::V, q.quotient, lower_edges(q.edge_map, m.marks))}, 1);
  });
  return out;
}

template <class F>
Element bilinear(const Element& a, const Element& b, F&& f) {
  Element out;
  for (const auto& [x, c] : a)
    for (const auto& [y, d] : b) {
      Element part = f(x, y);
      part *= c * d;
      out += part;
    }
  return out;
}

}  // namespace

TensorElement phi(const Monomial& m) {
  if (m.sort != Sort::V) throw std::invalid_argument("phi expects a V monomial, got " + to_string(m));
  return multiplicative(m, {Monomial::unit(Sort::W), Monomial::unit(Sort::V)}, phi_atom);
}

TensorElement phi(const Element& x) {
  return extend_linearly([](const Monomial& m) { return phi(m); }, x);
}

Element star(const Monomial& a, const Monomial& b) {
  detail::require_atom(a, Sort::V);
  detail::require_atom(b, Sort::V);
  const MarkedTree& x = tree_from_key(a.factors[0]);
  const MarkedTree& y = tree_from_key(b.factors[0]);
  const Embedded trunk = prune_trunk(x.tree, x.marks).trunk;
  if (canonical_key(trunk.tree) != canonical_key(y.tree)) return {};
  LiftTally tally(Sort::V, x);
  for (EdgeSet d : admissible_cuts(trunk.tree)) {
    if (canonical_key(trunk.tree, d) != b.factors[0]) continue;
    EdgeSet z = to_host(trunk, d);
    const EdgeSet raised = z;
    x.marks.for_each([&](int e) {
      if (!has_marked_ancestor(x.tree, e, raised)) z.insert(e);
    });
    tally.add(x.tree, z);
  }
  return tally.result();
}

Element sharp(const Monomial& a, const Monomial& b) {
  detail::require_atom(a, Sort::W);
  detail::require_atom(b, Sort::W);
  const MarkedTree& x = tree_from_key(a.factors[0]);
  const MarkedTree& y = tree_from_key(b.factors[0]);
  const Contraction q = contract(x.tree, x.marks);
  if (canonical_key(q.quotient) != canonical_key(y.tree)) return {};
  LiftTally tally(Sort::W, x);
  for_each_subset(q.quotient.edges(), [&](EdgeSet d) {
    if (canonical_key(q.quotient, d) == b.factors[0]) tally.add(x.tree, x.marks | raise_edges(q.edge_map, d));
  });
  return tally.result();
}

Element psi(const Monomial& a, const Monomial& b) {
  detail::require_atom(a, Sort::W);
  detail::require_atom(b, Sort::V);
  const MarkedTree& x = tree_from_key(a.factors[0]);
  const MarkedTree& y = tree_from_key(b.factors[0]);
  const Contraction q = contract(x.tree, x.marks);
  if (canonical_key(q.quotient) != canonical_key(y.tree)) return {};
  LiftTally tally(Sort::V, x);
  for (EdgeSet d : admissible_cuts(q.quotient))
    if (canonical_key(q.quotient, d) == b.factors[0]) tally.add(x.tree, raise_edges(q.edge_map, d));
  return tally.result();
}

Element star(const Element& a, const Element& b) {
  return bilinear(a, b, [](const Monomial& x, const Monomial& y) { return star(x, y); });
}

Element sharp(const Element& a, const Element& b) {
  return bilinear(a, b, [](const Monomial& x, const Monomial& y) { return sharp(x, y); });
}

Element psi(const Element& a, const Element& b) {
  return bilinear(a, b, [](const Monomial& x, const Monomial& y) { return psi(x, y); });
}

std::optional<Tensor> xi_aligned(const RootedTree& t, EdgeSet s1, EdgeSet trunk_cut, EdgeSet s2, EdgeSet vcut) {
  if (!is_admissible(t, trunk_cut) || !is_admissible(t, vcut)) return std::nullopt;
  const Embedded trunk = prune_trunk(t, trunk_cut).trunk;
  if (!s2.subset_of(to_host(trunk, trunk.tree.edges()))) return std::nullopt;
  const EdgeSet marks = s1 | s2;
  if (!vcut.disjoint(marks)) return std::nullopt;
  const Contraction q = contract(t, marks);
  return Tensor{pair_atom(Sort::W, t, marks), pair_atom(Sort::V, q.quotient, lower_edges(q.edge_map, vcut))};
}

TensorElement xi_search(const Monomial& a, const Monomial& b, const Monomial& c) {
  detail::require_atom(a, Sort::W);
  detail::require_atom(b, Sort::W);
  detail::require_atom(c, Sort::V);
  const MarkedTree& x = tree_from_key(a.factors[0]);
  const MarkedTree& y = tree_from_key(b.factors[0]);
  const MarkedTree& u = tree_from_key(c.factors[0]);

  const Contraction q = contract(x.tree, x.marks);
  if (canonical_key(q.quotient) != canonical_key(u.tree)) return {};
  const std::vector<int> sigma = canonical_isomorphism(u.tree, {}, q.quotient, {});
  EdgeSet image;
  u.marks.for_each([&](int v) { image.insert(sigma[static_cast<std::size_t>(v)]); });
  const EdgeSet lifted = raise_edges(q.edge_map, image);

  std::vector<std::pair<std::string, EdgeSet>> cuts;
  for (EdgeSet cut : admissible_cuts(x.tree)) cuts.emplace_back(canonical_key(x.tree, cut), cut);
  std::sort(cuts.begin(), cuts.end());
  const std::string target = canonical_key(y.tree);
  for (const auto& [key, cut] : cuts) {
    const Embedded trunk = prune_trunk(x.tree, cut).trunk;
    if (canonical_key(trunk.tree) != target) continue;
    const std::vector<int> rho = canonical_isomorphism(y.tree, {}, trunk.tree, {});
    EdgeSet local;
    y.marks.for_each([&](int v) { local.insert(rho[static_cast<std::size_t>(v)]); });
    if (auto hit = xi_aligned(x.tree, x.marks, cut, to_host(trunk, local), lifted)) return TensorElement::basis(*hit);
  }
  return {};
}

namespace {

// Calls f(aligned triple, aligned xi value, remaining V factor) for every term
// of τ23∘(phi⊗phi)∘Δ on one pair; the triple is given as class keys.
template <class F>
void for_each_xi_term(const MarkedTree& x, F&& f) {
  const RootedTree& t = x.tree;
  for (EdgeSet cut : delta_cuts(t, x.marks)) {
    const Embedded trunk = prune_trunk(t, cut).trunk;
    const EdgeSet inner = to_local(trunk, x.marks);
    const EdgeSet above = edges_above(trunk.tree, inner);
    for_each_subset(edges_above(t, cut), [&](EdgeSet s1) {
      const Contraction q1 = contract(t, s1);
      const Monomial u = pair_atom(Sort::V, q1.quotient, lower_edges(q1.edge_map, cut));
      for_each_subset(above, [&](EdgeSet s2) {
        const Contraction q2 = contract(trunk.tree, s2);
        const Monomial rest = pair_atom(Sort::V, q2.quotient, lower_edges(q2.edge_map, inner));
        const Tensor triple{pair_atom(Sort::W, t, s1), pair_atom(Sort::W, trunk.tree, s2), u};
        f(triple, xi_aligned(t, s1, cut, to_host(trunk, s2), cut), rest);
      });
    });
  }
}

}  // namespace

TensorElement xi_diagram_rhs(const Monomial& v_pair) {
  detail::require_atom(v_pair, Sort::V);
  TensorElement out;
  for_each_xi_term(tree_from_key(v_pair.factors[0]),
                   [&](const Tensor&, const std::optional<Tensor>& xi, const Monomial& rest) {
                     if (xi) out.add({(*xi)[0], (*xi)[1], rest}, 1);
                   });
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Product tables over a finite basis, filled before the workers start.

using Product = std::function<Element(const Monomial&, const Monomial&)>;

struct Basis {
  std::vector<Monomial> items;
  std::unordered_map<std::string, std::size_t> index;

  Basis(Flavor flavor, int max_vertices) : items(basis_pairs(flavor, max_vertices)) {
    for (std::size_t i = 0; i < items.size(); ++i) index.emplace(items[i].factors[0], i);
  }
};

class Table {
 public:
  Table(const Basis& left, const Basis& right, Product f) : left_(left), right_(right), f_(std::move(f)) {
    cells_.reserve(left.items.size() * right.items.size());
    for (const auto& a : left.items)
      for (const auto& b : right.items) cells_.push_back(f_(a, b));
  }

  Element at(const Monomial& a, const Monomial& b) const {
    auto i = left_.index.find(a.factors[0]);
    auto j = right_.index.find(b.factors[0]);
    if (i == left_.index.end() || j == right_.index.end()) return f_(a, b);
    return cells_[i->second * right_.items.size() + j->second];
  }

  Element operator()(const Element& a, const Monomial& b) const {
    Element out;
    for (const auto& [x, c] : a) out += c * at(x, b);
    return out;
  }
  Element operator()(const Monomial& a, const Element& b) const {
    Element out;
    for (const auto& [y, d] : b) out += d * at(a, y);
    return out;
  }

 private:
  const Basis& left_;
  const Basis& right_;
  Product f_;
  std::vector<Element> cells_;
};

std::string triple_name(const Monomial& a, const Monomial& b, const Monomial& c) {
  return to_string(a) + " | " + to_string(b) + " | " + to_string(c);
}

template <class Sides>
LawReport over_triples(std::string law, int max_vertices, int jobs, const Basis& p, const Basis& q, const Basis& r,
                       Sides sides) {
  const std::size_t nq = q.items.size(), nr = r.items.size();
  return run_law(std::move(law), max_vertices, p.items.size() * nq * nr, jobs, [&](std::size_t i) {
    const Monomial& a = p.items[i / (nq * nr)];
    const Monomial& b = q.items[(i / nr) % nq];
    const Monomial& c = r.items[i % nr];
    const auto [lhs, rhs] = sides(a, b, c);
    return compare_sides(triple_name(a, b, c), as_tensor(lhs), as_tensor(rhs));
  });
}

template <class Sides>
LawReport over_pairs(std::string law, Flavor flavor, int max_vertices, int jobs, Sides sides) {
  const auto basis = basis_pairs(flavor, max_vertices);
  return run_law(std::move(law), max_vertices, basis.size(), jobs, [&](std::size_t i) {
    const auto [lhs, rhs] = sides(basis[i]);
    return compare_sides(to_string(basis[i]), lhs, rhs);
  });
}

const auto kDelta = [](const Monomial& m) { return delta_D(m); };
const auto kGamma = [](const Monomial& m) { return gamma_Dtilde(m); };
const auto kPhi = [](const Monomial& m) { return phi(m); };

LawReport star_assoc(int n, int jobs) {
  const Basis v(Flavor::V, n);
  const Table st(v, v, [](const Monomial& a, const Monomial& b) { return star(a, b); });
  return over_triples("star-assoc", n, jobs, v, v, v, [&](const Monomial& a, const Monomial& b, const Monomial& c) {
    return std::pair{st(st.at(a, b), c), st(a, st.at(b, c))};
  });
}

LawReport sharp_assoc(int n, int jobs) {
  const Basis w(Flavor::W, n);
  const Table sh(w, w, [](const Monomial& a, const Monomial& b) { return sharp(a, b); });
  return over_triples("sharp-assoc", n, jobs, w, w, w, [&](const Monomial& a, const Monomial& b, const Monomial& c) {
    return std::pair{sh(sh.at(a, b), c), sh(a, sh.at(b, c))};
  });
}

LawReport psi_action(int n, int jobs) {
  const Basis v(Flavor::V, n), w(Flavor::W, n);
  const Table ps(w, v, [](const Monomial& a, const Monomial& b) { return psi(a, b); });
  const Table sh(w, w, [](const Monomial& a, const Monomial& b) { return sharp(a, b); });
  return over_triples("psi-action", n, jobs, w, w, v, [&](const Monomial& a, const Monomial& b, const Monomial& c) {
    return std::pair{ps(a, ps.at(b, c)), ps(sh.at(a, b), c)};
  });
}

LawReport psi_star(int n, int jobs) {
  const Basis v(Flavor::V, n), w(Flavor::W, n);
  const Table ps(w, v, [](const Monomial& a, const Monomial& b) { return psi(a, b); });
  const Table st(v, v, [](const Monomial& a, const Monomial& b) { return star(a, b); });
  return over_triples("psi-star", n, jobs, w, v, v, [&](const Monomial& a, const Monomial& b, const Monomial& c) {
    return std::pair{ps(a, st.at(b, c)), st(ps.at(a, b), c)};
  });
}

struct LawEntry {
  std::string name;
  std::function<LawReport(int, int)> run;
};

const std::vector<LawEntry>& registry() {
  static const std::vector<LawEntry> laws{
      {"comodule",
       [](int n, int jobs) {
         return over_pairs("comodule", Flavor::V, n, jobs, [](const Monomial& m) {
           const TensorElement p = phi(m);
           return std::pair{apply_at(p, 0, kGamma), apply_at(p, 1, kPhi)};
         });
       }},
      {"delta-comodule-morphism",
       [](int n, int jobs) {
         return over_pairs("delta-comodule-morphism", Flavor::V, n, jobs, [](const Monomial& m) {
           return std::pair{apply_at(delta_D(m), 0, kPhi), apply_at(phi(m), 1, kDelta)};
         });
       }},
      {"psi-action", psi_action},
      {"psi-star", psi_star},
      {"xi-diagram",
       [](int n, int jobs) {
         return over_pairs("xi-diagram", Flavor::V, n, jobs, [](const Monomial& m) {
           return std::pair{apply_at(phi(m), 1, kDelta), xi_diagram_rhs(m)};
         });
       }},
      {"star-assoc", star_assoc},
      {"sharp-assoc", sharp_assoc},
      {"coassoc-D",
       [](int n, int jobs) {
         return over_pairs("coassoc-D", Flavor::V, n, jobs, [](const Monomial& m) {
           const TensorElement d = delta_D(m);
           return std::pair{apply_at(d, 0, kDelta), apply_at(d, 1, kDelta)};
         });
       }},
      {"coassoc-Dt",
       [](int n, int jobs) {
         return over_pairs("coassoc-Dt", Flavor::W, n, jobs, [](const Monomial& m) {
           const TensorElement d = gamma_Dtilde(m);
           return std::pair{apply_at(d, 0, kGamma), apply_at(d, 1, kGamma)};
         });
       }},
      {"P2-D",
       [](int n, int jobs) {
         return over_pairs("P2-D", Flavor::V, n, jobs, [](const Monomial& m) {
           return std::pair{project_P2_all(delta_D(m)), coproduct_ck(project_P2(m))};
         });
       }},
      {"P2-Dt",
       [](int n, int jobs) {
         return over_pairs("P2-Dt", Flavor::W, n, jobs, [](const Monomial& m) {
           return std::pair{project_P2_all(gamma_Dtilde(m)), coproduct_contract(project_P2(m))};
         });
       }},
      {"ckm-codistributivity", check_ckm_codistributivity},
      {"coassoc-CK", check_coassociativity_ck},
      {"coassoc-Ht", check_coassociativity_contract},
      {"xi-products", check_xi_diagram_products},
      {"xi-search-agreement", check_xi_search_agreement},
  };
  return laws;
}

constexpr std::size_t kDefaultLaws = 12;

}  // namespace

const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
  }();
  return names;
}

const std::vector<std::string>& default_laws() {
  static const std::vector<std::string> names(law_names().begin(),
                                              law_names().begin() + static_cast<std::ptrdiff_t>(kDefaultLaws));
  return names;
}

bool is_known_law(const std::string& name) {
  const auto& names = law_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

LawReport verify_law(const std::string& name, int max_vertices, int jobs) {
  if (max_vertices < 1) throw std::invalid_argument("max_vertices must be at least 1");
  for (const auto& e : registry())
    if (e.name == name) return e.run(max_vertices, jobs);
  throw std::invalid_argument("unknown law: " + name);
}

LawReport check_xi_diagram_products(int max_vertices, int jobs) {
  const auto basis = basis_pairs(Flavor::V, max_vertices);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) pairs.emplace_back(i, j);
  return run_law("xi-products", max_vertices, pairs.size(), jobs, [&](std::size_t k) {
    const Monomial& a = basis[pairs[k].first];
    const Monomial& b = basis[pairs[k].second];
    const Monomial m = a * b;
    return compare_sides(to_string(m), apply_at(phi(m), 1, kDelta),
                         multiply(xi_diagram_rhs(a), xi_diagram_rhs(b)));
  });
}

LawReport check_xi_search_agreement(int max_vertices, int jobs) {
  const auto basis = basis_pairs(Flavor::V, max_vertices);
  return run_law("xi-search-agreement", max_vertices, basis.size(), jobs, [&](std::size_t i) {
    TensorElement aligned, searched;
    for_each_xi_term(tree_from_key(basis[i].factors[0]),
                     [&](const Tensor& triple, const std::optional<Tensor>& xi, const Monomial&) {
                       const TensorElement tag = TensorElement::basis(triple);
                       if (xi) aligned += otimes(tag, TensorElement::basis(*xi));
                       searched += otimes(tag, xi_search(triple[0], triple[1], triple[2]));
                     });
    return compare_sides(to_string(basis[i]), aligned, searched);
  });
}

}  // namespace treebialg
