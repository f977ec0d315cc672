#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <utility>

#include "treebialg/cut_contract.hpp"
#include "treebialg/doubling.hpp"

namespace oracle {

using namespace treebialg;

namespace {

std::vector<std::vector<int>> kids_of(const Parents& p) {
  std::vector<std::vector<int>> kids(p.size());
  for (std::size_t v = 1; v < p.size(); ++v) kids[static_cast<std::size_t>(p[v])].push_back(static_cast<int>(v));
  return kids;
}

std::string ahu_at(const std::vector<std::vector<int>>& kids, std::uint64_t marks, int v) {
  std::vector<std::string> parts;
  for (int c : kids[static_cast<std::size_t>(v)])
    parts.push_back(((marks >> c) & 1U ? "m" : "") + ahu_at(kids, marks, c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& s : parts) out += s;
  return out + ")";
}

bool below(const Parents& p, int a, int b) {  // edge a lies strictly under edge b
  for (int w = p[static_cast<std::size_t>(b)]; w > 0; w = p[static_cast<std::size_t>(w)])
    if (w == a) return true;
  return false;
}

// Subtree hanging from v as a parent array in ascending host order.
Parents subtree(const Parents& p, int v) {
  std::vector<int> members{v};
  for (std::size_t w = static_cast<std::size_t>(v) + 1; w < p.size(); ++w)
    if (std::find(members.begin(), members.end(), p[w]) != members.end()) members.push_back(static_cast<int>(w));
  Parents out(members.size(), -1);
  for (std::size_t i = 1; i < members.size(); ++i) {
    const int parent = p[static_cast<std::size_t>(members[i])];
    out[i] = static_cast<int>(std::find(members.begin(), members.end(), parent) - members.begin());
  }
  return out;
}

Parents graft_all(const std::vector<Parents>& forest) {
  Parents out{-1};
  for (const auto& t : forest) {
    const int base = static_cast<int>(out.size());
    for (std::size_t v = 0; v < t.size(); ++v) out.push_back(v == 0 ? 0 : t[v] + base);
  }
  return out;
}

Monomial forest_key(const std::vector<Parents>& trees) {
  std::vector<std::string> keys;
  for (const auto& t : trees) keys.push_back(canonical_key(to_tree(t)));
  return Monomial{Sort::Forest, keys};
}

using Term = std::pair<std::vector<Parents>, std::vector<Parents>>;

std::vector<Term> ck_tree_terms(const Parents& t) {
  std::vector<Parents> children;
  for (std::size_t v = 1; v < t.size(); ++v)
    if (t[v] == 0) children.push_back(subtree(t, static_cast<int>(v)));
  std::vector<Term> forest_terms{{{}, {}}};
  for (const auto& c : children) {
    std::vector<Term> next;
    for (const auto& [l, r] : forest_terms)
      for (const auto& [cl, cr] : ck_tree_terms(c)) {
        Term joined{l, r};
        joined.first.insert(joined.first.end(), cl.begin(), cl.end());
        joined.second.insert(joined.second.end(), cr.begin(), cr.end());
        next.push_back(std::move(joined));
      }
    forest_terms = std::move(next);
  }
  std::vector<Term> out{{{t}, {}}};
  for (auto& [l, r] : forest_terms) out.push_back({l, {graft_all(r)}});
  return out;
}

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int v) { return up[static_cast<std::size_t>(v)] == v ? v : up[static_cast<std::size_t>(v)] = find(up[static_cast<std::size_t>(v)]); }
  void join(int a, int b) { up[static_cast<std::size_t>(find(b))] = find(a); }
};

}  // namespace

RootedTree to_tree(const Parents& p) { return RootedTree::from_parents(p); }

std::string ahu(const Parents& p, std::uint64_t marks) { return ahu_at(kids_of(p), marks, 0); }

std::vector<Parents> all_parent_arrays(int n) {
  std::vector<Parents> out;
  Parents p(static_cast<std::size_t>(n), -1);
  std::function<void(int)> fill = [&](int v) {
    if (v == n) {
      out.push_back(p);
      return;
    }
    for (int q = 0; q < v; ++q) {
      p[static_cast<std::size_t>(v)] = q;
      fill(v + 1);
    }
  };
  fill(1);
  return out;
}

std::vector<Parents> distinct_trees(int n) {
  std::set<std::string> seen;
  std::vector<Parents> out;
  for (auto& p : all_parent_arrays(n))
    if (seen.insert(ahu(p)).second) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> admissible_masks(const Parents& p) {
  const int n = static_cast<int>(p.size());
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); mask += 2) {
    bool ok = true;
    for (int a = 1; a < n && ok; ++a)
      for (int b = 1; b < n && ok; ++b)
        if (((mask >> a) & 1U) && ((mask >> b) & 1U) && below(p, a, b)) ok = false;
    if (ok) out.push_back(mask);
  }
  return out;
}

long long automorphisms(const Parents& p, std::uint64_t marks) {
  const int n = static_cast<int>(p.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  long long count = 0;
  do {
    bool ok = true;
    for (int v = 1; v < n && ok; ++v) {
      const int image = perm[static_cast<std::size_t>(v)];
      ok = p[static_cast<std::size_t>(image)] == perm[static_cast<std::size_t>(p[static_cast<std::size_t>(v)])] &&
           ((marks >> v) & 1U) == ((marks >> image) & 1U);
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return count;
}

TensorElement ck_by_grafting(const Monomial& forest) {
  std::vector<Term> terms{{{}, {}}};
  for (const auto& key : forest.factors) {
    const Parents t = tree_from_key(key).tree.parents();
    std::vector<Term> next;
    for (const auto& [l, r] : terms)
      for (const auto& [tl, tr] : ck_tree_terms(t)) {
        Term joined{l, r};
        joined.first.insert(joined.first.end(), tl.begin(), tl.end());
        joined.second.insert(joined.second.end(), tr.begin(), tr.end());
        next.push_back(std::move(joined));
      }
    terms = std::move(next);
  }
  TensorElement out;
  for (const auto& [l, r] : terms) out.add({forest_key(l), forest_key(r)}, 1);
  return out;
}

TensorElement contraction_direct(const Monomial& forest) {
  TensorElement out = TensorElement::basis({Monomial::unit(Sort::Forest), Monomial::unit(Sort::Forest)});
  for (const auto& key : forest.factors) {
    const Parents p = tree_from_key(key).tree.parents();
    const int n = static_cast<int>(p.size());
    TensorElement tree_terms;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); mask += 2) {
      UnionFind uf(p.size());
      for (int v = 1; v < n; ++v)
        if ((mask >> v) & 1U) uf.join(p[static_cast<std::size_t>(v)], v);
      std::vector<int> tops;  // ascending minimum vertex of each class
      for (int v = 0; v < n; ++v)
        if (v == 0 || !((mask >> v) & 1U)) tops.push_back(v);
      auto class_of = [&](int v) {
        const int r = uf.find(v);
        for (std::size_t i = 0; i < tops.size(); ++i)
          if (uf.find(tops[i]) == r) return static_cast<int>(i);
        return -1;
      };
      std::vector<Parents> pieces;
      Parents quotient(tops.size(), -1);
      for (std::size_t i = 0; i < tops.size(); ++i) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
          if (class_of(v) == static_cast<int>(i)) members.push_back(v);
        Parents piece(members.size(), -1);
        for (std::size_t j = 1; j < members.size(); ++j)
          piece[j] = static_cast<int>(
              std::find(members.begin(), members.end(), p[static_cast<std::size_t>(members[j])]) - members.begin());
        pieces.push_back(piece);
        if (i > 0) quotient[i] = class_of(p[static_cast<std::size_t>(tops[i])]);
      }
      tree_terms.add({forest_key(pieces), Monomial::atom(Sort::Forest, canonical_key(to_tree(quotient)))}, 1);
    }
    out = multiply(out, tree_terms);
  }
  return out;
}

namespace {

template <class Coproduct>
Element transpose(const Monomial& a, const Monomial& b, Flavor flavor, Coproduct&& coproduct) {
  const RootedTree& t = tree_from_key(a.factors[0]).tree;
  Element out;
  for (EdgeSet marks : enumerate_marks(t, flavor)) {
    const Monomial z = Monomial::atom(sort_of(flavor), canonical_key(t, marks));
    out.add(z, coproduct(z).coeff({a, b}));
  }
  return out;
}

// rho(t,C) = Σ_{S ⊆ edges∖C} (t,S)_W ⊗ (t/S, C)_V, written without the library's contraction.
TensorElement rho(const Monomial& z) {
  const MarkedTree& m = tree_from_key(z.factors[0]);
  const Parents p = m.tree.parents();
  const int n = static_cast<int>(p.size());
  TensorElement out;
  const std::uint64_t free = m.tree.edges().bits() & ~m.marks.bits();
  for (std::uint64_t s = free;; s = (s - 1) & free) {
    // Quotient vertices are the tops of the classes, in ascending order.
    std::vector<int> top(p.size());
    std::vector<int> index(p.size(), -1);
    Parents q;
    std::uint64_t qmarks = 0;
    for (int v = 0; v < n; ++v) {
      if (v > 0 && ((s >> v) & 1U)) {
        top[static_cast<std::size_t>(v)] = top[static_cast<std::size_t>(p[static_cast<std::size_t>(v)])];
        continue;
      }
      top[static_cast<std::size_t>(v)] = v;
      index[static_cast<std::size_t>(v)] = static_cast<int>(q.size());
      q.push_back(v == 0 ? -1 : index[static_cast<std::size_t>(top[static_cast<std::size_t>(p[static_cast<std::size_t>(v)])])]);
      if (m.marks.contains(v)) qmarks |= std::uint64_t{1} << (q.size() - 1);
    }
    out.add({Monomial::atom(Sort::W, canonical_key(m.tree, EdgeSet{s})),
             Monomial::atom(Sort::V, canonical_key(to_tree(q), EdgeSet{qmarks}))},
            1);
    if (s == 0) break;
  }
  return out;
}

}  // namespace

Element star_transpose(const Monomial& a, const Monomial& b) {
  return transpose(a, b, Flavor::V, [](const Monomial& z) { return delta_D(z); });
}

Element sharp_transpose(const Monomial& a, const Monomial& b) {
  return transpose(a, b, Flavor::W, [](const Monomial& z) { return gamma_Dtilde(z); });
}

Element psi_transpose(const Monomial& a, const Monomial& b) {
  return transpose(a, b, Flavor::V, rho);
}

}  // namespace oracle
