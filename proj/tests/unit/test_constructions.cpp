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

#include "emgraded/constructions.hpp"
#include "emgraded/error.hpp"
#include "oracles/brute_force.hpp"
#include "support/fixtures.hpp"

using namespace emg;
using testing_support::element;

namespace {

bool revalidates(const FiniteRing& r) {
  FiniteRing copy = FiniteRing::validate(r.tables());
  return copy.same_tables(r);
}

}  // namespace

TEST_CASE("cyclic rings") {
  CHECK(cyclic(4).order() == 4);
  CHECK(cyclic(1).order() == 1);
  CHECK(zero_divisors(cyclic(6)).ids() == std::vector<Element>{0, 2, 3, 4});
  CHECK_THROWS_AS(cyclic(0), PreconditionError);
  CHECK_THROWS_AS(cyclic(5000), CapExceeded);
}

TEST_CASE("direct products") {
  auto p = direct_product({cyclic(2), cyclic(2)});
  CHECK(p.ring.order() == 4);
  CHECK(idempotents(p.ring).size() == 4);  // 0 and the three nontrivial ones
  CHECK(p.from_tuple({1, 0}) != p.from_tuple({0, 1}));
  for (Element a = 0; a < 4; ++a) CHECK(p.from_tuple(p.to_tuple(a)) == a);

  auto z6 = cyclic(6);
  CHECK(find_isomorphism(direct_product({cyclic(2), cyclic(3)}).ring, z6));
  CHECK(direct_product({z6}).ring.same_tables(z6));
  CHECK(revalidates(p.ring));
}

TEST_CASE("truncated polynomial quotients") {
  auto e1 = poly_quotient_xn(cyclic(4), 2);
  CHECK(e1.order() == 16);
  auto z2y = poly_quotient_xn(cyclic(2), 2);
  CHECK(z2y.order() == 4);
  const Element y = element(z2y, "Y");
  CHECK(z2y.mul(y, y) == 0);

  auto z2y3 = poly_quotient_xn(cyclic(2), 3);
  CHECK(z2y3.order() == 8);
  // Zero divisors are the multiples of Y.
  const auto multiples = principal_ideal(z2y3, element(z2y3, "Y")).elements;
  CHECK(zero_divisors(z2y3) == multiples);
  CHECK(revalidates(e1));
}

TEST_CASE("monomial quotients") {
  auto e2 = monomial_quotient(6, 2, {{1, 1}}, 2, {8192});
  CHECK(e2.ring.order() == 7776);
  CHECK(e2.basis.size() == 5);
  auto y2 = monomial_quotient(4, 1, {{2}}, 1);
  CHECK(find_isomorphism(y2.ring, poly_quotient_xn(cyclic(4), 2)).has_value());
  auto d0 = monomial_quotient(5, 2, {}, 0);
  CHECK(d0.ring.order() == 5);
  CHECK(find_isomorphism(d0.ring, cyclic(5)));
  CHECK(!e2.ring.tags().empty());
}

TEST_CASE("idealization") {
  auto z4 = cyclic(4);
  auto ide = idealization(z4);
  CHECK(ide.order() == 16);
  CHECK(find_isomorphism(ide, poly_quotient_xn(z4, 2)));
  CHECK(oracle::isomorphism(ide, poly_quotient_xn(z4, 2)));
  CHECK(ide.label(ide.one()) == "(1,0)");
  for (Element m = 0; m < 4; ++m)
    for (Element n = 0; n < 4; ++n)
      CHECK(ide.mul(element(ide, "(0," + std::to_string(m) + ")"),
                    element(ide, "(0," + std::to_string(n) + ")")) == 0);
}

TEST_CASE("small presentations of R[x]/(x^2) agree") {
  for (std::size_t m : {1, 2, 3, 4}) {
    CAPTURE(m);
    auto base = cyclic(m);
    auto a = poly_quotient_xn(base, 2);
    auto b = idealization(base);
    auto c = monomial_quotient(m, 1, {{2}}, 1).ring;
    CHECK(oracle::isomorphism(a, b));
    CHECK(oracle::isomorphism(b, c));
    CHECK(oracle::isomorphism(a, c));
  }
  auto z2z2 = direct_product({cyclic(2), cyclic(2)}).ring;
  CHECK(oracle::isomorphism(poly_quotient_xn(z2z2, 2), idealization(z2z2)));
}

TEST_CASE("group rings") {
  auto z4 = cyclic(4);
  auto g = group_ring(z4, {2});
  CHECK(g.order() == 16);
  CHECK(g.is_unit(element(g, "s")));
  auto z2g = group_ring(cyclic(2), {2});
  const Element one_plus_s = element(z2g, "1+s");
  CHECK(z2g.mul(one_plus_s, one_plus_s) == 0);
  CHECK(z2g.is_zero_divisor(one_plus_s));
  CHECK(group_ring(z4, {}).same_tables(z4));
  CHECK(group_ring(z4, {1}).same_tables(z4));
  CHECK(revalidates(g));
}

TEST_CASE("localizations") {
  const auto& e1 = testing_support::preset("e1");
  const FiniteRing& r = e1.ring;
  auto id = localization(r, ElementSet{1});
  CHECK(id.ring.order() == r.order());
  CHECK(find_isomorphism(r, id.ring));
  auto at_units = localization(r, units(r));
  CHECK(at_units.ring.order() == r.order());

  // Homogeneous regular elements of e1 are units already.
  std::vector<Element> hreg;
  for (Element a : homogeneous_elements(*e1.grading))
    if (r.is_unit(a)) hreg.push_back(a);
  CHECK(hreg == std::vector<Element>{1, 3});
  auto t = localization(r, ElementSet(hreg));
  CHECK(find_isomorphism(r, t.ring));

  for (const auto& name : {"z6", "e1", "prod-e1sm", "z4-xn-3"}) {
    CAPTURE(name);
    const FiniteRing& base = testing_support::preset(name).ring;
    for (Element s = 1; s < base.order(); ++s) {
      if (base.mul(s, s) == 0 && base.order() > 8) continue;
      const auto S = powers_of(base, s);
      if (S.contains(0)) continue;
      auto loc = localization(base, S);
      CHECK(revalidates(loc.ring));
      const auto& phi = loc.canonical_map;
      for (Element a = 0; a < base.order(); ++a) {
        for (Element b = 0; b < base.order(); ++b) {
          CHECK(phi[base.add(a, b)] == loc.ring.add(phi[a], phi[b]));
          CHECK(phi[base.mul(a, b)] == loc.ring.mul(phi[a], phi[b]));
        }
        const bool killed = std::any_of(S.begin(), S.end(), [&](Element u) { return base.mul(u, a) == 0; });
        CHECK((phi[a] == 0) == killed);
      }
      CHECK(phi[base.one()] == loc.ring.one());
    }
  }
}

TEST_CASE("caps are enforced") {
  CHECK_THROWS_AS(poly_quotient_xn(cyclic(6), 5), CapExceeded);
  CHECK_THROWS_AS(monomial_quotient(6, 2, {{1, 1}}, 2), CapExceeded);
  CHECK_NOTHROW(monomial_quotient(6, 2, {{1, 1}}, 1));
}
