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

#include "emgraded/presets.hpp"

#include "emgraded/error.hpp"

namespace emg {

namespace {

Json cyclic_spec(int n) { return {{"kind", "cyclic"}, {"n", n}}; }

Json monomial_spec(int d) {
  return {{"kind", "monomialQuotient"}, {"m", 6}, {"v", 2}, {"relations", {"xy"}}, {"d", d}};
}

std::vector<Preset> make_presets() {
  std::vector<Preset> out;
  for (int n = 2; n <= 6; ++n)
    out.push_back({"z" + std::to_string(n), cyclic_spec(n),
                   "Z" + std::to_string(n) + " with the trivial grading"});
  out.push_back({"e1",
                 {{"kind", "polyQuotientXn"}, {"base", cyclic_spec(4)}, {"n", 2}},
                 "Z4[Y]/(Y^2) graded over Z2 by Z4 and Z4Y; graded EM but not EM"});
  out.push_back({"e1-idealization",
                 {{"kind", "idealization"}, {"base", cyclic_spec(4)}},
                 "Z4(+)Z4 graded over Z2 by Z4(+)0 and 0(+)Z4"});
  out.push_back({"e2-trunc-d1", monomial_spec(1),
                 "Z6[x,y]/(xy) truncated at total degree 1, graded over ZxZ by monomial"});
  out.push_back({"e2-trunc-d2", monomial_spec(2),
                 "Z6[x,y]/(xy) truncated at total degree 2, graded over ZxZ by monomial",
                 8192});
  out.push_back({"z4-xn-3",
                 {{"kind", "polyQuotientXn"}, {"base", cyclic_spec(4)}, {"n", 3}},
                 "Z4[x]/(x^3) graded over Z3 by Z4 x^k"});
  out.push_back({"z4-groupring-z2",
                 {{"kind", "groupRing"}, {"base", cyclic_spec(4)}, {"group", {2}}},
                 "group ring Z4[Z2] graded by Z4 s^k; a crossed product"});
  const Json dual2 = {{"kind", "idealization"}, {"base", cyclic_spec(2)}};
  out.push_back({"prod-e1sm",
                 {{"kind", "product"}, {"factors", {dual2, dual2}}},
                 "(Z2(+)Z2) x (Z2(+)Z2) with the componentwise Z2 grading"});
  return out;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = make_presets();
  return all;
}

const Preset& find_preset(const std::string& name) {
  for (const auto& p : presets())
    if (p.name == name) return p;
  throw SpecError("unknown preset '" + name + "'");
}

GradedRing build_preset(const Preset& preset, std::optional<std::size_t> max_order) {
  return build_construction(preset.spec, {max_order.value_or(preset.max_order)});
}

}  // namespace emg
