#include "treebialg/forest.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <utility>

namespace treebialg {

RootedTree::RootedTree() : parent_{-1}, children_(1) {}

RootedTree RootedTree::from_parents(std::vector<int> parents) {
  if (parents.empty() || parents[0] != -1)
    throw std::invalid_argument("tree must have root 0 with parent -1");
  if (parents.size() > static_cast<std::size_t>(kMaxVertices))
    throw std::invalid_argument("tree exceeds " + std::to_string(kMaxVertices) + " vertices");
  RootedTree t;
  t.children_.assign(parents.size(), {});
  for (std::size_t v = 1; v < parents.size(); ++v) {
    const int p = parents[v];
    if (p < 0 || static_cast<std::size_t>(p) >= v)
      throw std::invalid_argument("parent of vertex " + std::to_string(v) + " must precede it");
    t.children_[static_cast<std::size_t>(p)].push_back(static_cast<int>(v));
  }
  t.parent_ = std::move(parents);
  return t;
}

EdgeSet RootedTree::edges() const {
  const int n = vertex_count();
  const std::uint64_t all = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return EdgeSet{all & ~std::uint64_t{1}};
}

RootedTree graft(std::span<const RootedTree> subtrees) {
  std::vector<int> parents{-1};
  for (const RootedTree& s : subtrees) {
    const int offset = static_cast<int>(parents.size());
    parents.push_back(0);
    for (int v = 1; v < s.vertex_count(); ++v) parents.push_back(s.parent(v) + offset);
  }
  return RootedTree::from_parents(std::move(parents));
}

bool is_admissible(const RootedTree& t, EdgeSet marks) {
  bool ok = true;
  marks.for_each([&](int v) {
    for (int u = t.parent(v); u > 0 && ok; u = t.parent(u))
      if (marks.contains(u)) ok = false;
  });
  return ok;
}

std::vector<std::string> subtree_encodings(const RootedTree& t, EdgeSet marks) {
  if (!marks.subset_of(t.edges())) throw std::invalid_argument("marks are not edges of the tree");
  const int n = t.vertex_count();
  std::vector<std::string> enc(static_cast<std::size_t>(n));
  std::vector<const std::string*> kids;
  for (int v = n - 1; v >= 0; --v) {
    kids.clear();
    for (int c : t.children(v)) kids.push_back(&enc[static_cast<std::size_t>(c)]);
    std::sort(kids.begin(), kids.end(), [](const std::string* a, const std::string* b) { return *a < *b; });
    std::string& out = enc[static_cast<std::size_t>(v)];
    if (marks.contains(v)) out += '*';
    out += '[';
    for (const std::string* k : kids) out += *k;
    out += ']';
  }
  return enc;
}

std::string canonical_key(const RootedTree& t, EdgeSet marks) {
  return std::move(subtree_encodings(t, marks)[0]);
}

std::vector<int> canonical_order(const RootedTree& t, EdgeSet marks) {
  const auto enc = subtree_encodings(t, marks);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(t.vertex_count()));
  std::vector<int> stack{0};
  std::vector<int> kids;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    kids.assign(t.children(v).begin(), t.children(v).end());
    std::sort(kids.begin(), kids.end(), [&](int a, int b) {
      const auto& ea = enc[static_cast<std::size_t>(a)];
      const auto& eb = enc[static_cast<std::size_t>(b)];
      return ea != eb ? ea < eb : a < b;
    });
    stack.insert(stack.end(), kids.rbegin(), kids.rend());
  }
  return order;
}

std::vector<int> canonical_isomorphism(const RootedTree& from, EdgeSet from_marks,
                                       const RootedTree& to, EdgeSet to_marks) {
  if (canonical_key(from, from_marks) != canonical_key(to, to_marks))
    throw std::invalid_argument("trees are not isomorphic");
  const auto a = canonical_order(from, from_marks);
  const auto b = canonical_order(to, to_marks);
  std::vector<int> map(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) map[static_cast<std::size_t>(a[i])] = b[i];
  return map;
}

Integer automorphism_count(const RootedTree& t, EdgeSet marks) {
  const auto enc = subtree_encodings(t, marks);
  const int n = t.vertex_count();
  std::vector<Integer> aut(static_cast<std::size_t>(n), 1);
  std::vector<const std::string*> kids;
  for (int v = n - 1; v >= 0; --v) {
    Integer& a = aut[static_cast<std::size_t>(v)];
    kids.clear();
    for (int c : t.children(v)) {
      a *= aut[static_cast<std::size_t>(c)];
      kids.push_back(&enc[static_cast<std::size_t>(c)]);
    }
    std::sort(kids.begin(), kids.end(), [](const std::string* x, const std::string* y) { return *x < *y; });
    for (std::size_t i = 0; i < kids.size();) {
      std::size_t j = i;
      while (j < kids.size() && *kids[j] == *kids[i]) ++j;
      for (std::size_t k = 2; k <= j - i; ++k) a *= k;
      i = j;
    }
  }
  return aut[0];
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }

  MarkedTree parse_tree() {
    std::vector<int> parents;
    EdgeSet marks;
    std::vector<int> open;  // stack of vertices whose ']' is pending
    const std::size_t start = pos_;
    if (!at_end() && text_[pos_] == '*') throw ParseError("mark on a root", pos_);
    expect_open();
    parents.push_back(-1);
    open.push_back(0);
    while (!open.empty()) {
      if (at_end()) throw ParseError("unterminated tree starting at byte " + std::to_string(start), pos_);
      const char c = text_[pos_];
      if (c == ']') {
        ++pos_;
        open.pop_back();
        continue;
      }
      bool marked = false;
      if (c == '*') {
        marked = true;
        ++pos_;
      }
      expect_open();
      const int v = static_cast<int>(parents.size());
      if (v >= kMaxVertices)
        throw ParseError("tree exceeds " + std::to_string(kMaxVertices) + " vertices", pos_ - 1);
      parents.push_back(open.back());
      if (marked) marks.insert(v);
      open.push_back(v);
    }
    return MarkedTree{RootedTree::from_parents(std::move(parents)), marks};
  }

 private:
  void expect_open() {
    if (at_end()) throw ParseError("expected '['", pos_);
    if (text_[pos_] != '[') throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class OnTree>
void parse_trees(std::string_view text, OnTree&& on_tree) {
  if (text == "1") return;
  TreeParser p(text);
  while (!p.at_end()) {
    const std::size_t start = p.pos();
    on_tree(p.parse_tree(), start);
  }
}

}  // namespace

MarkedTree parse_marked_tree(std::string_view text) {
  TreeParser p(text);
  MarkedTree m = p.parse_tree();
  if (!p.at_end()) throw ParseError("trailing input after tree", p.pos());
  return m;
}

std::vector<RootedTree> parse_forest(std::string_view text) {
  std::vector<RootedTree> out;
  parse_trees(text, [&](MarkedTree m, std::size_t start) {
    if (!m.marks.empty()) throw ParseError("marks are not allowed in a plain forest", start);
    out.push_back(std::move(m.tree));
  });
  return out;
}

std::vector<MarkedTree> parse_marked_forest(std::string_view text, Flavor flavor) {
  std::vector<MarkedTree> out;
  parse_trees(text, [&](MarkedTree m, std::size_t start) {
    if (flavor == Flavor::V && !is_admissible(m.tree, m.marks))
      throw ParseError("marks do not form an admissible cut", start);
    out.push_back(std::move(m));
  });
  return out;
}

const MarkedTree& tree_from_key(const std::string& key) {
  thread_local std::unordered_map<std::string, MarkedTree> cache;
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, parse_marked_tree(key)).first;
  return it->second;
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<RootedTree> enumerate_trees(int n) {
  if (n < 1) throw std::invalid_argument("trees have at least one vertex");
  // keys_by_size[k] = canonical keys of all trees with k vertices.
  std::vector<std::vector<std::string>> keys_by_size(static_cast<std::size_t>(n) + 1);
  keys_by_size[1] = {"[]"};
  for (int size = 2; size <= n; ++size) {
    std::vector<std::pair<std::string, int>> pool;
    for (int k = 1; k < size; ++k)
      for (const auto& key : keys_by_size[static_cast<std::size_t>(k)]) pool.emplace_back(key, k);
    std::sort(pool.begin(), pool.end());
    auto& out = keys_by_size[static_cast<std::size_t>(size)];
    std::string children;
    // Choose a multiset of children in nondecreasing pool order, which is
    // ascending key order, so the concatenation is already canonical.
    std::function<void(std::size_t, int)> choose = [&](std::size_t from, int remaining) {
      if (remaining == 0) {
        out.push_back("[" + children + "]");
        return;
      }
      for (std::size_t i = from; i < pool.size(); ++i) {
        if (pool[i].second > remaining) continue;
        const std::size_t mark = children.size();
        children += pool[i].first;
        choose(i, remaining - pool[i].second);
        children.resize(mark);
      }
    };
    choose(0, size - 1);
    std::sort(out.begin(), out.end());
  }
  std::vector<RootedTree> trees;
  for (const auto& key : keys_by_size[static_cast<std::size_t>(n)])
    trees.push_back(parse_marked_tree(key).tree);
  return trees;
}

// ---------------------------------------------------------------------------
// Monomials

const char* sort_tag(Sort s) {
  switch (s) {
    case Sort::Forest: return "";
    case Sort::V: return "V:";
    case Sort::W: return "W:";
  }
  return "";
}

Monomial::Monomial(Sort s, std::vector<std::string> keys) : sort(s), factors(std::move(keys)) {
  std::sort(factors.begin(), factors.end());
}

Monomial make_forest(std::span<const RootedTree> trees) {
  std::vector<std::string> keys;
  keys.reserve(trees.size());
  for (const auto& t : trees) keys.push_back(canonical_key(t));
  return Monomial{Sort::Forest, std::move(keys)};
}

Monomial make_pairs(Flavor flavor, std::span<const MarkedTree> pairs) {
  std::vector<std::string> keys;
  keys.reserve(pairs.size());
  for (const auto& p : pairs) keys.push_back(canonical_key(p));
  return Monomial{sort_of(flavor), std::move(keys)};
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.sort != b.sort) throw std::invalid_argument("product of monomials of different sorts");
  Monomial out;
  out.sort = a.sort;
  out.factors.reserve(a.factors.size() + b.factors.size());
  std::merge(a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
             std::back_inserter(out.factors));
  return out;
}

std::vector<Monomial> enumerate_forests(int max_total) {
  std::vector<std::pair<std::string, int>> pool;  // (key, vertices)
  for (int n = 1; n <= max_total; ++n)
    for (const auto& t : enumerate_trees(n)) pool.emplace_back(canonical_key(t), n);
  std::vector<Monomial> out;
  std::vector<std::string> chosen;
  std::function<void(std::size_t, int)> choose = [&](std::size_t from, int budget) {
    out.emplace_back(Sort::Forest, chosen);
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (pool[i].second > budget) continue;
      chosen.push_back(pool[i].first);
      choose(i, budget - pool[i].second);
      chosen.pop_back();
    }
  };
  choose(0, max_total);
  std::sort(out.begin(), out.end());
  return out;
}

int vertex_degree(const Monomial& forest) {
  int n = 0;
  for (const auto& k : forest.factors) n += static_cast<int>(std::count(k.begin(), k.end(), '['));
  return n;
}

int edge_degree(const Monomial& forest) {
  return vertex_degree(forest) - static_cast<int>(forest.factors.size());
}

std::string to_string(const Monomial& m) {
  std::string out = sort_tag(m.sort);
  if (m.factors.empty()) return out + "1";
  for (const auto& k : m.factors) out += k;
  return out;
}

Monomial parse_monomial(std::string_view text) {
  if (text.starts_with("V:") || text.starts_with("W:")) {
    const Flavor flavor = text[0] == 'V' ? Flavor::V : Flavor::W;
    try {
      return make_pairs(flavor, parse_marked_forest(text.substr(2), flavor));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at byte")),
                       e.offset() + 2);
    }
  }
  return make_forest(parse_forest(text));
}

}  // namespace treebialg
