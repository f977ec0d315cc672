#include <doctest.h>

#include <random>

#include "treebialg/coalgebra_classic.hpp"
#include "treebialg/free_module.hpp"

using namespace treebialg;

namespace {

Monomial F(const char* text) { return parse_monomial(text); }

TensorElement T(std::initializer_list<const char*> parts, Integer c = 1) {
  Tensor t;
  for (const char* p : parts) t.push_back(F(p));
  return TensorElement::basis(t, c);
}

Element random_element(std::mt19937& rng, const std::vector<Monomial>& pool) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  Element x;
  for (int i = 0; i < 4; ++i) x.add(pool[pick(rng)], coeff(rng));
  return x;
}

}  // namespace

TEST_CASE("zero coefficients are never stored") {
  Element x;
  x.add(F("[]"), 2);
  x.add(F("[]"), -2);
  CHECK(x.is_zero());
  x.add(F("[[]]"), 0);
  CHECK(x.size() == 0);
  CHECK(render(x) == "0");
}

TEST_CASE("extend_linearly") {
  Element x = Element::basis(F("[]"), 3) + Element::basis(F("[[]]"), -1);
  CHECK(extend_linearly([](const Monomial& m) { return Element::basis(m); }, x) == x);
  CHECK(extend_linearly([](const Monomial&) { return Element{}; }, x).is_zero());
  CHECK(extend_linearly([](const Monomial& m) { return Element::basis(m, 2); }, x) == Integer{2} * x);
}

TEST_CASE("extend_linearly respects composition") {
  std::vector<Monomial> pool = enumerate_forests(4);
  auto f = [](const Monomial& m) { return quotient_hprime(Element::basis(m)); };
  auto g = [](const Monomial& m) { return Element::basis(m * m, 2); };
  Element x;
  for (std::size_t i = 0; i < pool.size(); ++i) x.add(pool[i], static_cast<int>(i) - 5);
  const Element composed = extend_linearly(g, extend_linearly(f, x));
  const Element direct = extend_linearly([&](const Monomial& m) { return extend_linearly(g, f(m)); }, x);
  CHECK(composed == direct);
}

TEST_CASE("tau23") {
  CHECK(tau23(T({"[]", "[[]]", "[][]", "1"})) == T({"[]", "[][]", "[[]]", "1"}));
  const TensorElement x = T({"[]", "[[]]", "[][]", "1"}, 2) - T({"1", "[]", "[[]]", "[]"});
  CHECK(tau23(tau23(x)) == x);
  CHECK(tau23(x) == T({"[]", "[][]", "[[]]", "1"}, 2) - T({"1", "[[]]", "[]", "[]"}));
  CHECK_THROWS_AS(tau23(T({"[]", "[]"})), std::invalid_argument);
}

TEST_CASE("m13") {
  CHECK(m13(T({"[]", "[[]]", "[]", "1"})) == T({"[][]", "[[]]", "1"}));
  CHECK(m13(T({"1", "[]", "[[]]", "[]"})) == T({"[[]]", "[]", "[]"}));
  CHECK(m13(T({"[[]]", "[]", "[]", "1"}) + T({"[]", "[]", "[[]]", "1"})) == T({"[[]][]", "[]", "1"}, 2));
  CHECK_THROWS_AS(m13(T({"[]", "[]"})), std::invalid_argument);
}

TEST_CASE("ring axioms on random combinations") {
  std::mt19937 rng(2718);
  const auto pool = enumerate_forests(3);
  for (int round = 0; round < 200; ++round) {
    const Element a = random_element(rng, pool), b = random_element(rng, pool), c = random_element(rng, pool);
    REQUIRE(a + b == b + a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(Integer{3} * (a + b) == Integer{3} * a + Integer{3} * b);
    REQUIRE(a - a == Element{});
    REQUIRE(multiply(a, b) == multiply(b, a));
    REQUIRE(multiply(a, b + c) == multiply(a, b) + multiply(a, c));
    REQUIRE(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
}

TEST_CASE("otimes and componentwise product") {
  const TensorElement a = T({"[]"}), b = T({"[[]]"});
  CHECK(otimes(a, b) == T({"[]", "[[]]"}));
  CHECK(multiply(T({"[]", "1"}), T({"[]", "[]"})) == T({"[][]", "[]"}));
  CHECK_THROWS_AS(multiply(T({"[]"}), T({"[]", "[]"})), std::invalid_argument);
}

TEST_CASE("rendering is sorted bytewise and signs are spelled out") {
  const TensorElement x = T({"[]", "1"}, -2) + T({"1", "[]"}) + T({"[[]]", "1"});
  CHECK(render(x) == "1·(1 ⊗ []) + 1·([[]] ⊗ 1) - 2·([] ⊗ 1)");
  CHECK(render(Element::basis(parse_monomial("V:[*[]]"))) == "1·(V:[*[]])");
}

TEST_CASE("JSON round trip, big coefficients included") {
  TensorElement x = T({"W:[*[]]", "V:[]"}, 5) + T({"[[]]", "1"}, -1);
  Integer big = 1;
  for (int i = 0; i < 100; ++i) big *= 3;
  x.add({F("[]"), F("[]")}, big);
  const nlohmann::json j = to_json(x);
  CHECK(j["terms"].size() == 3);
  CHECK(tensor_from_json(nlohmann::json::parse(j.dump())) == x);
  bool saw_string = false;
  for (const auto& term : j["terms"]) saw_string = saw_string || term["coeff"].is_string();
  CHECK(saw_string);
}
