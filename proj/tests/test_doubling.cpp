#include <doctest.h>

#include <random>

#include "treebialg/coalgebra_classic.hpp"
#include "treebialg/doubling.hpp"
#include "treebialg/interplay.hpp"

using namespace treebialg;

namespace {

Monomial V(const char* key) { return Monomial::atom(Sort::V, key); }
Monomial W(const char* key) { return Monomial::atom(Sort::W, key); }

TensorElement T(const Monomial& a, const Monomial& b, Integer c = 1) { return TensorElement::basis({a, b}, c); }

template <class Counit>
Element contract_side(const TensorElement& x, std::size_t pos, Counit eps) {
  Element out;
  for (const auto& [k, c] : x) out.add(k[1 - pos], c * eps(k[pos]));
  return out;
}

}  // namespace

TEST_CASE("delta on V pairs") {
  for (const char* t : {"[]", "[[]]", "[[][]]", "[[[]][]]"}) CHECK(delta_D(V(t)) == T(V(t), V(t)));
  CHECK(delta_D(V("[*[]]")) == T(V("[[]]"), V("[*[]]")) + T(V("[*[]]"), V("[]")));
  // Chain of three vertices with the root edge cut.
  CHECK(delta_D(V("[*[[]]]")) ==
        T(V("[[[]]]"), V("[*[[]]]")) + T(V("[[*[]]]"), V("[*[]]")) + T(V("[*[[]]]"), V("[]")));
  CHECK(delta_D(Monomial::unit(Sort::V)) == T(Monomial::unit(Sort::V), Monomial::unit(Sort::V)));
  CHECK_THROWS_AS(delta_D(W("[*[]]")), std::invalid_argument);
}

TEST_CASE("gamma on W pairs") {
  for (const char* t : {"[]", "[[]]", "[[][]]"}) CHECK(gamma_Dtilde(W(t)) == T(W(t), W(t)));
  CHECK(gamma_Dtilde(W("[*[]]")) == T(W("[[]]"), W("[*[]]")) + T(W("[*[]]"), W("[]")));
  CHECK(gamma_Dtilde(W("[*[*[]]]")) == T(W("[[[]]]"), W("[*[*[]]]")) + T(W("[[*[]]]"), W("[*[]]")) +
                                           T(W("[*[[]]]"), W("[*[]]")) + T(W("[*[*[]]]"), W("[]")));
  CHECK_THROWS_AS(gamma_Dtilde(V("[*[]]")), std::invalid_argument);
}

TEST_CASE("gamma has 2^|S| terms before collection") {
  for (const auto& p : basis_pairs(Flavor::W, 5))
    REQUIRE(gamma_Dtilde(p).total() == Integer{1} << pair_degree(p));
}

TEST_CASE("counits") {
  CHECK(counit_pair(V("[[]]")) == 1);
  CHECK(counit_pair(W("[[]]")) == 1);
  CHECK(counit_pair(V("[*[]]")) == 0);
  CHECK(counit_pair(W("[*[]]")) == 0);
  CHECK(counit_pair(V("[[]]") * V("[*[]]")) == 0);
  CHECK(counit_pair(Monomial::unit(Sort::V)) == 1);
}

TEST_CASE("counit laws") {
  auto eps = [](const Monomial& m) { return counit_pair(m); };
  for (const auto& p : basis_pairs(Flavor::V, 6)) {
    const TensorElement d = delta_D(p);
    REQUIRE(contract_side(d, 0, eps) == Element::basis(p));
    REQUIRE(contract_side(d, 1, eps) == Element::basis(p));
  }
  for (const auto& p : basis_pairs(Flavor::W, 5)) {
    const TensorElement g = gamma_Dtilde(p);
    REQUIRE(contract_side(g, 0, eps) == Element::basis(p));
    REQUIRE(contract_side(g, 1, eps) == Element::basis(p));
  }
}

TEST_CASE("pair products") {
  const Monomial a = V("[*[]]"), b = V("[[][]]");
  CHECK(pair_product(Monomial::unit(Sort::V), a) == a);
  CHECK(pair_product(a, b) == pair_product(b, a));
  CHECK(pair_degree(pair_product(a, V("[*[[]]]"))) == pair_degree(a) + pair_degree(V("[*[[]]]")));
  CHECK_THROWS_AS(pair_product(a, W("[*[]]")), std::invalid_argument);
  CHECK_THROWS_AS(pair_product(a, parse_monomial("[]")), std::invalid_argument);
}

TEST_CASE("second projection") {
  // The example tree with its 2-chain child cut off.
  CHECK(project_P2(V("[*[[]][]]")) == parse_monomial("[[]]"));
  CHECK(project_P2(V("[[[]][]]")) == parse_monomial("1"));
  CHECK(project_P2(W("[[[]][]]")) == parse_monomial("[][][][]"));
  CHECK(project_P2(W("[*[[]][]]")) == parse_monomial("[[]][][]"));
  CHECK(pair_degree(V("[*[[]][]]")) == 2);
  CHECK(pair_degree(W("[*[[]]*[]]")) == 2);
}

TEST_CASE("closure: every factor is a valid pair") {
  for (const auto& p : basis_pairs(Flavor::V, 6))
    for (const auto& [k, c] : delta_D(p)) {
      REQUIRE(is_valid_pair(k[0]));
      REQUIRE(is_valid_pair(k[1]));
      REQUIRE(pair_degree(k[0]) + pair_degree(k[1]) == pair_degree(p));
    }
  for (const auto& p : basis_pairs(Flavor::W, 5))
    for (const auto& [k, c] : gamma_Dtilde(p)) {
      REQUIRE(is_valid_pair(k[0]));
      REQUIRE(is_valid_pair(k[1]));
      REQUIRE(pair_degree(k[0]) + pair_degree(k[1]) == pair_degree(p));
    }
}

TEST_CASE("coassociativity and P2 intertwining") {
  CHECK(verify_law("coassoc-D", 6).passed());
  CHECK(verify_law("coassoc-Dt", 5).passed());
  CHECK(verify_law("P2-D", 6).passed());
  CHECK(verify_law("P2-Dt", 5).passed());
}

TEST_CASE("delta and gamma are multiplicative") {
  std::mt19937 rng(161);
  const auto v = basis_pairs(Flavor::V, 4), w = basis_pairs(Flavor::W, 4);
  std::uniform_int_distribution<std::size_t> pv(0, v.size() - 1), pw(0, w.size() - 1);
  for (int i = 0; i < 100; ++i) {
    const Monomial a = v[pv(rng)], b = v[pv(rng)];
    REQUIRE(delta_D(a * b) == multiply(delta_D(a), delta_D(b)));
    const Monomial c = w[pw(rng)], d = w[pw(rng)];
    REQUIRE(gamma_Dtilde(c * d) == multiply(gamma_Dtilde(c), gamma_Dtilde(d)));
    REQUIRE(project_P2(a * b) == project_P2(a) * project_P2(b));
  }
}

TEST_CASE("pair enumeration") {
  CHECK(pairs_of_size(Flavor::V, 3).size() == 6);
  CHECK(pairs_of_size(Flavor::W, 2).size() == 2);
  for (const auto& p : basis_pairs(Flavor::V, 5)) REQUIRE(is_valid_pair(p));
  CHECK_FALSE(is_valid_pair(V("[*[*[]]]")));
  CHECK_FALSE(is_valid_pair(W("[[]*[]]")));  // not canonical
}
