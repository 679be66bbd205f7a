// Copyright 2026 The emgraded Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>

#include "emgraded/constructions.hpp"
#include "emgraded/error.hpp"
#include "emgraded/ring.hpp"
#include "oracles/brute_force.hpp"
#include "support/fixtures.hpp"

using namespace emg;
using testing_support::element;
using testing_support::preset;

namespace {

RingTables zn_tables(std::size_t n) {
  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = static_cast<TableEntry>((a + b) % n);
      t.mul[a * n + b] = static_cast<TableEntry>((a * b) % n);
    }
  t.one = n > 1 ? 1 : 0;
  return t;
}

std::vector<Element> ids(const ElementSet& s) { return s.ids(); }

}  // namespace

TEST_CASE("validate accepts Z4 and the zero ring") {
  auto z4 = FiniteRing::validate(zn_tables(4));
  CHECK(z4.order() == 4);
  CHECK(z4.one() == 1);
  auto zero = FiniteRing::validate(zn_tables(1));
  CHECK(zero.order() == 1);
  CHECK(zero.one() == 0);
}

TEST_CASE("validate rejects a broken multiplication table with a witness") {
  auto t = zn_tables(4);
  t.mul[2 * 4 + 2] = 1;
  try {
    FiniteRing::validate(t);
    FAIL("expected InvalidRing");
  } catch (const InvalidRing& e) {
    const std::string axiom = e.axiom();
    CHECK((axiom.find("associativ") != std::string::npos ||
           axiom.find("distributiv") != std::string::npos));
    REQUIRE(!e.witness().empty());
    const auto& w = e.witness();
    // The witness really breaks an axiom of the altered table.
    auto mul = [&](Element a, Element b) { return Element(t.mul[a * 4 + b]); };
    auto add = [&](Element a, Element b) { return Element(t.add[a * 4 + b]); };
    bool broken = false;
    if (w.size() == 3) {
      broken = mul(mul(w[0], w[1]), w[2]) != mul(w[0], mul(w[1], w[2])) ||
               mul(w[0], add(w[1], w[2])) != add(mul(w[0], w[1]), mul(w[0], w[2]));
    }
    CHECK(broken);
  }
}

TEST_CASE("validate rejects noncommutative and malformed tables") {
  auto t = zn_tables(3);
  t.mul[1 * 3 + 2] = 0;
  CHECK_THROWS_AS(FiniteRing::validate(t), InvalidRing);
  auto bad = zn_tables(3);
  bad.add[0] = 7;
  CHECK_THROWS_AS(FiniteRing::validate(bad), InvalidRing);
  auto shrunk = zn_tables(3);
  shrunk.mul.pop_back();
  CHECK_THROWS_AS(FiniteRing::validate(shrunk), InvalidRing);
}

TEST_CASE("zero divisors, units, idempotents") {
  auto z4 = cyclic(4), z5 = cyclic(5), z6 = cyclic(6);
  CHECK(ids(zero_divisors(z4)) == std::vector<Element>{0, 2});
  CHECK(ids(zero_divisors(z5)) == std::vector<Element>{0});
  CHECK(ids(zero_divisors(z6)) == std::vector<Element>{0, 2, 3, 4});
  CHECK(ids(idempotents(z6)) == std::vector<Element>{0, 1, 3, 4});
  CHECK(ids(units(z4)) == std::vector<Element>{1, 3});
  CHECK(ids(regular_elements(z5)) == std::vector<Element>{1, 2, 3, 4});
  CHECK(ids(regular_elements(z4)) == std::vector<Element>{1, 3});
}

TEST_CASE("annihilators") {
  auto z4 = cyclic(4), z6 = cyclic(6);
  CHECK(ids(annihilator(z4, ElementSet{2}).elements) == std::vector<Element>{0, 2});
  CHECK(ids(annihilator(z4, ElementSet{1}).elements) == std::vector<Element>{0});
  CHECK(ids(annihilator(z6, ElementSet{2, 3}).elements) == std::vector<Element>{0});
  CHECK(ids(annihilator(z6, ElementSet{2}).elements) == std::vector<Element>{0, 3});
}

TEST_CASE("divisor solutions") {
  auto z4 = cyclic(4), z6 = cyclic(6);
  CHECK(ids(divisor_solutions(z4, 2, 2)) == std::vector<Element>{1, 3});
  CHECK(divisor_solutions(z4, 2, 1).empty());
  CHECK(ids(divisor_solutions(z6, 3, 0)) == std::vector<Element>{0, 2, 4});
}

TEST_CASE("generated and principal ideals") {
  auto z4 = cyclic(4), z6 = cyclic(6);
  const std::vector<Element> two{2}, none{}, two_three{2, 3};
  CHECK(ids(ideal_generated(z4, two).elements) == std::vector<Element>{0, 2});
  CHECK(ids(ideal_generated(z4, none).elements) == std::vector<Element>{0});
  CHECK(ideal_generated(z6, two_three).size() == 6);
  CHECK(is_principal(z4, ideal_generated(z4, two)) == Element{2});
  CHECK(is_principal(z6, ideal_generated(z6, two_three)) == Element{1});

  const auto& e1 = preset("e1").ring;
  const Element y2 = element(e1, "2Y");
  const auto ideal = ideal_generated(e1, std::vector<Element>{y2});
  CHECK(ideal.size() == 2);
  CHECK(is_principal(e1, ideal) == y2);
}

TEST_CASE("ring-level invariants over every small preset") {
  std::mt19937_64 rng(20261016);
  for (const auto& name : testing_support::small_presets(64)) {
    CAPTURE(name);
    const FiniteRing& r = preset(name).ring;
    const auto all = all_elements(r);
    const auto z = zero_divisors(r), u = units(r);
    CHECK(z.size() + u.size() == r.order());
    CHECK(z.intersect(u).empty());
    CHECK(z.ids() == oracle::zero_divisors(r));

    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(r.order() - 1));
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Element> s, t;
      for (int i = 0; i < 3; ++i) s.push_back(pick(rng));
      t = s;
      t.push_back(pick(rng));
      const auto as = annihilator(r, std::span<const Element>(s));
      const auto at = annihilator(r, std::span<const Element>(t));
      CHECK(at.elements.is_subset_of(as.elements));
      CHECK(as.elements.ids() == oracle::annihilator(r, s));

      const Element c = pick(rng), a = pick(rng);
      const auto sol = divisor_solutions(r, c, a);
      CHECK((sol.empty() || sol.size() == annihilator(r, ElementSet{c}).size()));

      const auto gen = ideal_generated(r, std::span<const Element>(s));
      CHECK(gen.elements.ids() == oracle::ideal(r, s));
      CHECK(ideal_generated(r, gen.elements).elements == gen.elements);
      for (const Ideal* I : {&as, &at, &gen})
        for (Element x : I->elements)
          for (Element y : I->elements) {
            CHECK(I->contains(r.add(x, y)));
            CHECK(I->contains(r.mul(x, pick(rng))));
          }
    }
  }
}

TEST_CASE("isomorphism search agrees with the oracle") {
  auto z6 = cyclic(6);
  auto z2z3 = direct_product({cyclic(2), cyclic(3)}).ring;
  auto phi = find_isomorphism(z2z3, z6);
  REQUIRE(phi);
  CHECK(oracle::isomorphism(z2z3, z6).has_value());
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b) {
      CHECK((*phi)[z2z3.add(a, b)] == z6.add((*phi)[a], (*phi)[b]));
      CHECK((*phi)[z2z3.mul(a, b)] == z6.mul((*phi)[a], (*phi)[b]));
    }
  auto z2z2 = direct_product({cyclic(2), cyclic(2)}).ring;
  CHECK_FALSE(find_isomorphism(z2z2, cyclic(4)));
  CHECK_FALSE(oracle::isomorphism(z2z2, cyclic(4)));
}
