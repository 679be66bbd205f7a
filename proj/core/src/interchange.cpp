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

#include "emgraded/interchange.hpp"

#include <cctype>

#include "emgraded/error.hpp"

namespace emg {

namespace {

template <typename T>
T field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw SpecError(where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw SpecError(where + ": field '" + key + "' has the wrong type");
  }
}

std::size_t nonnegative(const Json& j, const char* key, const std::string& where) {
  const auto v = field<std::int64_t>(j, key, where);
  if (v < 0) throw SpecError(where + ": field '" + std::string(key) + "' must be nonnegative");
  return static_cast<std::size_t>(v);
}

std::string variable_name(std::size_t i, std::size_t variables) {
  static const char* kNames[] = {"x", "y", "z"};
  return variables <= 3 ? kNames[i] : "x" + std::to_string(i + 1);
}

GradedRing build(const Json& spec, const ConstructionOptions& options, const std::string& where) {
  const auto kind = field<std::string>(spec, "kind", where);
  const std::string here = where + "/" + kind;

  if (kind == "cyclic") {
    auto ring = cyclic(nonnegative(spec, "n", here), options);
    auto grading = trivial_grading(ring);
    return {ring, grading};
  }
  if (kind == "product") {
    const auto factors = field<Json>(spec, "factors", here);
    if (!factors.is_array() || factors.empty())
      throw SpecError(here + ": 'factors' must be a nonempty array");
    std::vector<GradedRing> parts;
    for (std::size_t i = 0; i < factors.size(); ++i)
      parts.push_back(build(factors[i], options, here + "[" + std::to_string(i) + "]"));
    std::vector<FiniteRing> rings;
    for (const auto& p : parts) rings.push_back(p.ring);
    ProductRing product = direct_product(rings, options);
    std::optional<Grading> grading;
    const bool graded = std::all_of(parts.begin(), parts.end(), [&](const GradedRing& p) {
      return p.grading && p.grading->group() == parts.front().grading->group();
    });
    if (graded) {
      std::vector<Grading> gs;
      for (const auto& p : parts) gs.push_back(*p.grading);
      grading = product_grading(product, gs);
    }
    return {product.ring, grading};
  }
  if (kind == "polyQuotientXn") {
    const auto base = build(field<Json>(spec, "base", here), options, here);
    const std::size_t n = nonnegative(spec, "n", here);
    auto ring = poly_quotient_xn(base.ring, n, options);
    return {ring, xn_grading(ring, base.ring.order(), n)};
  }
  if (kind == "monomialQuotient") {
    const std::size_t m = nonnegative(spec, "m", here);
    const std::size_t v = nonnegative(spec, "v", here);
    const std::size_t d = nonnegative(spec, "d", here);
    std::vector<Exponents> relations;
    for (const auto& r : field<Json>(spec, "relations", here)) {
      if (r.is_string()) {
        relations.push_back(parse_monomial(r.get<std::string>(), v));
      } else if (r.is_array()) {
        relations.push_back(r.get<Exponents>());
      } else {
        throw SpecError(here + ": relations must be monomial strings or exponent vectors");
      }
    }
    auto q = monomial_quotient(m, v, relations, d, options);
    return {q.ring, truncated_monomial_grading(q)};
  }
  if (kind == "idealization") {
    const auto base = build(field<Json>(spec, "base", here), options, here);
    auto ring = idealization(base.ring, options);
    return {ring, idealization_grading(ring, base.ring.order())};
  }
  if (kind == "groupRing") {
    const auto base = build(field<Json>(spec, "base", here), options, here);
    const auto group = field<std::vector<std::int64_t>>(spec, "group", here);
    auto ring = group_ring(base.ring, group, options);
    return {ring, groupring_grading(ring, base.ring.order(), group)};
  }
  if (kind == "localization") {
    const auto base = build(field<Json>(spec, "base", here), options, here);
    const auto s = field<std::vector<Element>>(spec, "S", here);
    for (Element e : s)
      if (e >= base.ring.order()) throw SpecError(here + ": element " + std::to_string(e) + " out of range");
    const std::string mode = spec.value("grading", std::string("canonical"));
    if (mode == "canonical" && base.grading) {
      auto [local, grading] = graded_localization(*base.grading, ElementSet(s), options);
      return {local.ring, grading};
    }
    if (mode != "canonical" && mode != "trivial")
      throw SpecError(here + ": grading must be 'canonical' or 'trivial'");
    auto local = localization(base.ring, ElementSet(s), options);
    return {local.ring, trivial_grading(local.ring)};
  }
  throw SpecError(where + ": unknown construction kind '" + kind + "'");
}

}  // namespace

GradedRing build_construction(const Json& spec, const ConstructionOptions& options) {
  return build(spec, options, "spec");
}

Exponents parse_monomial(const std::string& text, std::size_t variables) {
  Exponents e(variables, 0);
  std::size_t pos = 0;
  auto fail = [&] { throw SpecError("non-monomial relation '" + text + "'"); };
  if (text.empty()) fail();
  while (pos < text.size()) {
    std::size_t best = variables;
    std::size_t best_len = 0;
    for (std::size_t v = 0; v < variables; ++v) {
      const std::string name = variable_name(v, variables);
      if (text.compare(pos, name.size(), name) == 0 && name.size() > best_len) {
        // x1 must not match the prefix of x12.
        const std::size_t after = pos + name.size();
        if (variables > 3 && after < text.size() && std::isdigit(static_cast<unsigned char>(text[after])))
          continue;
        best = v;
        best_len = name.size();
      }
    }
    if (best == variables) fail();
    pos += best_len;
    std::uint32_t power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail();
      power = static_cast<std::uint32_t>(std::stoul(text.substr(start, pos - start)));
    }
    if (pos < text.size() && text[pos] == '*') ++pos;
    e[best] += power;
  }
  return e;
}

Json ring_to_json(const FiniteRing& ring) {
  const std::size_t n = ring.order();
  Json j;
  j["order"] = n;
  Json add = Json::array(), mul = Json::array();
  for (Element a = 0; a < n; ++a) {
    std::vector<Element> ra(n), rm(n);
    for (Element b = 0; b < n; ++b) {
      ra[b] = ring.add(a, b);
      rm[b] = ring.mul(a, b);
    }
    add.push_back(ra);
    mul.push_back(rm);
  }
  j["add"] = std::move(add);
  j["mul"] = std::move(mul);
  j["zero"] = 0;
  j["one"] = ring.one();
  if (ring.has_labels()) j["labels"] = ring.labels();
  return j;
}

FiniteRing ring_from_json(const Json& j) {
  RingTables t;
  t.order = nonnegative(j, "order", "ring");
  if (t.order > kMaxTableOrder) throw CapExceeded("ring order exceeds " + std::to_string(kMaxTableOrder));
  auto table = [&](const char* key, std::vector<TableEntry>& out) {
    const auto rows = field<std::vector<std::vector<std::int64_t>>>(j, key, "ring");
    if (rows.size() != t.order) throw SpecError(std::string("ring: '") + key + "' must have order rows");
    for (const auto& row : rows) {
      if (row.size() != t.order) throw SpecError(std::string("ring: '") + key + "' must be square");
      for (auto v : row) {
        if (v < 0 || static_cast<std::size_t>(v) >= t.order)
          throw SpecError(std::string("ring: '") + key + "' entry out of range");
        out.push_back(static_cast<TableEntry>(v));
      }
    }
  };
  table("add", t.add);
  table("mul", t.mul);
  t.zero = static_cast<Element>(j.value("zero", 0));
  t.one = static_cast<Element>(nonnegative(j, "one", "ring"));
  if (j.contains("labels")) t.labels = field<std::vector<std::string>>(j, "labels", "ring");
  return FiniteRing::validate(std::move(t));
}

Json grading_to_json(const Grading& grading) {
  Json j;
  j["moduli"] = grading.group().moduli();
  Json comps = Json::array();
  for (const auto& c : grading.components()) {
    Json cj;
    cj["degree"] = c.degree;
    cj["elements"] = c.elements.ids();
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  return j;
}

Grading grading_from_json(const FiniteRing& ring, const Json& j) {
  const auto moduli = field<std::vector<std::int64_t>>(j, "moduli", "grading");
  for (auto m : moduli)
    if (m < 0) throw SpecError("grading: moduli must be nonnegative");
  std::vector<GradedComponent> comps;
  for (const auto& c : field<Json>(j, "components", "grading")) {
    auto degree = field<Degree>(c, "degree", "grading component");
    auto elems = field<std::vector<std::int64_t>>(c, "elements", "grading component");
    std::vector<Element> ids;
    for (auto e : elems) {
      if (e < 0 || static_cast<std::size_t>(e) >= ring.order())
        throw SpecError("grading: element " + std::to_string(e) + " is not in the ring");
      ids.push_back(static_cast<Element>(e));
    }
    comps.push_back({std::move(degree), ElementSet(std::move(ids))});
  }
  return Grading::validate(ring, GradingGroup(moduli), std::move(comps), ring.tags());
}

}  // namespace emg
