#include "treebialg/cut_contract.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace treebialg {

namespace {

// Builds the piece reachable from `top` through child edges accepted by `keep`.
template <class Keep>
Embedded collect(const RootedTree& t, int top, Keep&& keep) {
  std::vector<int> parents{-1};
  std::vector<int> origin{top};
  std::vector<std::pair<int, int>> stack{{top, 0}};  // (host vertex, local id)
  while (!stack.empty()) {
    const auto [v, local] = stack.back();
    stack.pop_back();
    const auto kids = t.children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      if (!keep(*it)) continue;
      const int id = static_cast<int>(origin.size());
      origin.push_back(*it);
      parents.push_back(local);
      stack.emplace_back(*it, id);
    }
  }
  return Embedded{RootedTree::from_parents(std::move(parents)), std::move(origin)};
}

}  // namespace

EdgeSet to_host(const Embedded& piece, EdgeSet local) {
  EdgeSet out;
  local.for_each([&](int w) { out.insert(piece.origin[static_cast<std::size_t>(w)]); });
  return out;
}

EdgeSet to_local(const Embedded& piece, EdgeSet host) {
  EdgeSet out;
  for (std::size_t w = 1; w < piece.origin.size(); ++w)
    if (host.contains(piece.origin[w])) out.insert(static_cast<int>(w));
  return out;
}

std::vector<EdgeSet> admissible_cuts(const RootedTree& t) {
  const int n = t.vertex_count();
  std::vector<std::vector<EdgeSet>> below(static_cast<std::size_t>(n));
  for (int v = n - 1; v >= 0; --v) {
    std::vector<EdgeSet> acc{EdgeSet{}};
    for (int c : t.children(v)) {
      std::vector<EdgeSet> options{EdgeSet::single(c)};
      const auto& sub = below[static_cast<std::size_t>(c)];
      options.insert(options.end(), sub.begin(), sub.end());
      std::vector<EdgeSet> next;
      next.reserve(acc.size() * options.size());
      for (EdgeSet a : acc)
        for (EdgeSet o : options) next.push_back(a | o);
      acc = std::move(next);
    }
    below[static_cast<std::size_t>(v)] = std::move(acc);
    for (int c : t.children(v)) std::vector<EdgeSet>().swap(below[static_cast<std::size_t>(c)]);
  }
  return std::move(below[0]);
}

EdgeSet edges_above(const RootedTree& t, EdgeSet cut) {
  EdgeSet out;
  for (int v = 1; v < t.vertex_count(); ++v) {
    const int p = t.parent(v);
    if (p > 0 && (cut.contains(p) || out.contains(p))) out.insert(v);
  }
  return out;
}

Embedded subtree_at(const RootedTree& t, int v) {
  return collect(t, v, [](int) { return true; });
}

PruneTrunk prune_trunk(const RootedTree& t, EdgeSet cut) {
  if (!cut.subset_of(t.edges()) || !is_admissible(t, cut))
    throw std::invalid_argument("cut is not admissible");
  PruneTrunk out;
  cut.for_each([&](int v) { out.pruning.push_back(subtree_at(t, v)); });
  out.trunk = collect(t, 0, [&](int c) { return !cut.contains(c); });
  return out;
}

std::vector<Embedded> subforest(const RootedTree& t, EdgeSet s) {
  std::vector<Embedded> out;
  for (int v = 0; v < t.vertex_count(); ++v)
    if (v == 0 || !s.contains(v)) out.push_back(collect(t, v, [&](int c) { return s.contains(c); }));
  return out;
}

Contraction contract(const RootedTree& t, EdgeSet s) {
  const int n = t.vertex_count();
  std::vector<int> vertex_class(static_cast<std::size_t>(n), -1);
  std::vector<int> to_quotient(static_cast<std::size_t>(n), -1);
  std::vector<int> to_original;
  std::vector<int> parents;
  for (int v = 0; v < n; ++v) {
    if (v != 0 && s.contains(v)) {
      vertex_class[static_cast<std::size_t>(v)] = vertex_class[static_cast<std::size_t>(t.parent(v))];
      continue;
    }
    const int id = static_cast<int>(to_original.size());
    vertex_class[static_cast<std::size_t>(v)] = id;
    to_original.push_back(v);
    parents.push_back(v == 0 ? -1 : vertex_class[static_cast<std::size_t>(t.parent(v))]);
    if (v != 0) to_quotient[static_cast<std::size_t>(v)] = id;
  }
  to_original[0] = -1;
  return Contraction{RootedTree::from_parents(std::move(parents)),
                     EdgeMap{std::move(to_original), std::move(to_quotient)}, std::move(vertex_class)};
}

EdgeSet raise_edges(const EdgeMap& map, EdgeSet quotient_edges) {
  EdgeSet out;
  quotient_edges.for_each([&](int w) { out.insert(map.original(w)); });
  return out;
}

EdgeSet lower_edges(const EdgeMap& map, EdgeSet original_edges) {
  EdgeSet out;
  original_edges.for_each([&](int v) {
    const int w = map.quotient(v);
    if (w < 0) throw std::invalid_argument("edge is contracted in the quotient");
    out.insert(w);
  });
  return out;
}

std::vector<EdgeSet> enumerate_marks(const RootedTree& t, Flavor flavor) {
  std::map<std::string, EdgeSet> classes;
  auto keep = [&](EdgeSet m) { classes.try_emplace(canonical_key(t, m), m); };
  if (flavor == Flavor::V) {
    for (EdgeSet c : admissible_cuts(t)) keep(c);
  } else {
    for_each_subset(t.edges(), keep);
  }
  std::vector<EdgeSet> out;
  out.reserve(classes.size());
  for (const auto& [key, marks] : classes) out.push_back(marks);
  return out;
}

}  // namespace treebialg
