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
#include "emgraded/deciders.hpp"
#include "emgraded/error.hpp"
#include "oracles/brute_force.hpp"
#include "support/fixtures.hpp"

using namespace emg;
using testing_support::element;
using testing_support::preset;

namespace {

std::vector<std::string> labels_of(const Json& arr) {
  std::vector<std::string> out;
  for (const auto& v : arr) out.push_back(v.get<std::string>());
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial poly_of(const Json& j) { return Polynomial(j["coefficients"].get<std::vector<Element>>()); }

}  // namespace

TEST_CASE("EM subsets") {
  auto z4 = cyclic(4);
  auto r = is_em_subset(z4, ElementSet{0, 2}, {});
  CHECK(r.verdict == Verdict::True);
  CHECK(r.bounds.empty());

  const auto& e1 = preset("e1");
  const FiniteRing& R = e1.ring;
  auto whole = is_em_subset(R, all_elements(R), {});
  REQUIRE(whole.verdict == Verdict::False);
  CHECK(labels_of(whole.witness["coefficient_set"]) == std::vector<std::string>{"2", "Y"});
  const Polynomial f = poly_of(whole.witness);
  CHECK(is_zero_divisor_poly(R, f));
  CHECK_FALSE(find_annihilating_content(R, f));
  CHECK_FALSE(oracle::first_content(R, f.coefficients()));

  auto comp = is_em_subset(R, e1.grading->components()[1].elements, {});
  CHECK(comp.verdict == Verdict::True);
}

TEST_CASE("EM rings") {
  CHECK(is_em_ring(preset("e1").ring, {}).verdict == Verdict::False);
  CHECK(is_em_ring(cyclic(5), {}).verdict == Verdict::True);
  auto z6 = is_em_ring(cyclic(6), {});
  CHECK(z6.verdict == Verdict::True);
  CHECK(z6.bounds.empty());
}

TEST_CASE("EM verdicts agree with brute force at low degree") {
  for (const auto& name : testing_support::small_presets(16)) {
    CAPTURE(name);
    const FiniteRing& r = preset(name).ring;
    const bool em = holds(is_em_ring(r, {}).verdict);
    CHECK(em == oracle::em_up_to_degree(r, r.order() <= 8 ? 2 : 1));
  }
}

TEST_CASE("graded EM") {
  auto e1 = is_em_g_graded(*preset("e1").grading, {});
  CHECK(e1.verdict == Verdict::True);
  CHECK(e1.bounds.empty());
  auto ide = is_em_g_graded(*preset("e1-idealization").grading, {});
  CHECK(ide.verdict == Verdict::True);
  auto e2 = is_em_g_graded(*preset("e2-trunc-d1").grading, {});
  CHECK(holds(e2.verdict));
  CHECK(std::any_of(e2.notes.begin(), e2.notes.end(),
                    [](const std::string& n) { return n.find("truncated") != std::string::npos; }));
}

TEST_CASE("subset caps bound the search") {
  SearchBounds b;
  b.max_subset = 1;
  auto r = is_em_ring(preset("e1").ring, b);
  CHECK(r.verdict == Verdict::TrueUpToBounds);
  CHECK(r.bounds.at("max_subset") == 1);
  CHECK(effective_subset_cap({}, 5) == 5);
  CHECK(effective_subset_cap({}, 40) == 4);
}

TEST_CASE("Armendariz") {
  const auto& e1 = preset("e1");
  const FiniteRing& r = e1.ring;
  SearchBounds d1;
  d1.max_degree = 1;
  auto a = is_armendariz(r, d1);
  REQUIRE(a.verdict == Verdict::False);
  const Polynomial f = poly_of(a.witness["f"]), g = poly_of(a.witness["g"]);
  CHECK(poly_mul(r, f, g).is_zero());
  const auto ij = a.witness["nonzero_product"];
  CHECK(r.mul(f[ij[0].get<std::size_t>()], g[ij[1].get<std::size_t>()]) != 0);
  // The textbook pair also breaks the property.
  const Polynomial h = parse_polynomial(r, "2+Y*x");
  CHECK(poly_mul(r, h, h).is_zero());
  CHECK(r.mul(h[0], h[1]) != 0);

  auto graded = is_armendariz_g_graded(*e1.grading, {});
  CHECK(holds(graded.verdict));
  CHECK(is_armendariz(cyclic(7), {}).verdict == Verdict::True);
}

TEST_CASE("graded Bezout") {
  CHECK(is_bezout_g_graded(trivial_grading(cyclic(6)), 2, {}).verdict == Verdict::True);
  CHECK(is_bezout_g_graded(trivial_grading(cyclic(5)), 2, {}).verdict == Verdict::True);
  auto e1 = is_bezout_g_graded(*preset("e1").grading, 2, {});
  if (holds(e1.verdict)) CHECK(holds(is_em_g_graded(*preset("e1").grading, {}).verdict));
  CHECK(e1.verdict == Verdict::False);
  const auto gens = e1.witness["generators"].get<std::vector<Element>>();
  const FiniteRing& r = preset("e1").ring;
  const auto I = ideal_generated(r, std::span<const Element>(gens));
  CHECK_FALSE(is_principal(r, I));
}

TEST_CASE("regular embedding") {
  auto z4 = cyclic(4);
  auto e1 = poly_quotient_xn(z4, 2);
  CHECK(check_regular_embedding(xn_grading(e1, 4, 2), {}).verdict == Verdict::True);
  auto z2 = poly_quotient_xn(cyclic(2), 3);
  CHECK(check_regular_embedding(xn_grading(z2, 2, 3), {}).verdict == Verdict::True);
  CHECK(check_regular_embedding(trivial_grading(z4), {}).verdict == Verdict::True);
}

TEST_CASE("annihilators of contents in a localization") {
  auto e1 = verify_t5(*preset("e1").grading, {});
  CHECK(e1.verdict == Verdict::True);
  const FiniteRing& r = preset("e1").ring;
  const Element y = element(r, "Y"), y2 = element(r, "2Y");
  CHECK(annihilator(r, ElementSet{y, y2}).elements == annihilator(r, ElementSet{y}).elements);
  CHECK(annihilator(r, ElementSet{y2}).size() == 8);
  auto field = verify_t5(trivial_grading(cyclic(5)), {});
  CHECK(field.verdict == Verdict::True);
}

TEST_CASE("bivariate contents") {
  const auto& e1 = preset("e1");
  const FiniteRing& r = e1.ring;
  CHECK(holds(verify_t7_bounded(*e1.grading, {}).verdict));

  ContentSearcher searcher(r);
  // F = 2 + 2y
  BivariatePolynomial F({Polynomial({2}), Polynomial({2})});
  auto flat = kronecker_flatten(F);
  auto c = searcher.first_content(flat.poly.coefficients());
  REQUIRE(c);
  CHECK(*c == 2);
  // F = Y + Yx*y
  const Element y = element(r, "Y");
  BivariatePolynomial G({Polynomial({y}), Polynomial({0, y})});
  auto fg = kronecker_flatten(G);
  auto cg = searcher.first_content(fg.poly.coefficients());
  REQUIRE(cg);
  const auto W = kronecker_unflatten(searcher.cofactor(*cg, fg.poly), fg.offsets);
  CHECK(bivariate_scale(r, *cg, W) == G);
  CHECK(oracle::regular_set(r, W.coefficient_set().ids()));
  CHECK(annihilator(r, ElementSet{*cg}).elements == annihilator(r, G.coefficient_set()).elements);
}

TEST_CASE("reports round-trip through JSON") {
  auto r = is_em_ring(preset("e1").ring, {});
  r.notes.push_back("extra");
  const Json j = to_json(r);
  CHECK(report_from_json(j) == r);
  CHECK(report_from_json(Json::parse(j.dump())) == r);
  auto b = r;
  b.verdict = Verdict::TrueUpToBounds;
  b.bounds["max_degree"] = 3;
  CHECK(report_from_json(to_json(b)) == b);
  CHECK_FALSE(to_json(b, false).contains("millis"));
  CHECK_THROWS(verdict_from_string("maybe"));
}

TEST_CASE("jobs do not change reports") {
  for (const auto& name : {"e1", "e1-idealization", "prod-e1sm", "e2-trunc-d1"}) {
    CAPTURE(name);
    const auto& gr = preset(name);
    SearchBounds one, eight;
    eight.jobs = 8;
    CHECK(to_json(is_em_ring(gr.ring, one), false) == to_json(is_em_ring(gr.ring, eight), false));
    CHECK(to_json(is_em_g_graded(*gr.grading, one), false) ==
          to_json(is_em_g_graded(*gr.grading, eight), false));
    if (gr.ring.order() <= 16)
      CHECK(to_json(is_armendariz(gr.ring, one), false) == to_json(is_armendariz(gr.ring, eight), false));
    CHECK(to_json(is_armendariz_g_graded(*gr.grading, one), false) ==
          to_json(is_armendariz_g_graded(*gr.grading, eight), false));
  }
}

TEST_CASE("Armendariz enumeration limits") {
  auto lowered = is_armendariz(testing_support::preset("prod-e1sm").ring, {});
  CHECK(lowered.bounds.at("max_degree") < 3);
  CHECK(std::any_of(lowered.notes.begin(), lowered.notes.end(),
                    [](const std::string& n) { return n.find("lowered") != std::string::npos; }));
  CHECK_THROWS_AS(is_armendariz(testing_support::preset("e2-trunc-d1").ring, {}), CapExceeded);
}
