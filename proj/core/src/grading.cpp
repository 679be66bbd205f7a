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

#include "emgraded/grading.hpp"

#include <algorithm>
#include <sstream>

#include "emgraded/error.hpp"

namespace emg {

std::string to_string(const Degree& degree) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < degree.size(); ++i) os << (i ? "," : "") << degree[i];
  os << ')';
  return os.str();
}

GradingGroup::GradingGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  for (auto m : moduli_)
    if (m < 0) throw SpecError("grading group moduli must be nonnegative");
}

Degree GradingGroup::reduce(Degree degree) const {
  if (degree.size() != moduli_.size())
    throw SpecError("degree " + to_string(degree) + " does not match group rank " +
                    std::to_string(moduli_.size()));
  for (std::size_t i = 0; i < degree.size(); ++i) {
    if (moduli_[i] == 0) continue;
    degree[i] %= moduli_[i];
    if (degree[i] < 0) degree[i] += moduli_[i];
  }
  return degree;
}

Degree GradingGroup::combine(const Degree& a, const Degree& b) const {
  Degree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return reduce(std::move(out));
}

Degree GradingGroup::inverse(const Degree& a) const {
  Degree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return reduce(std::move(out));
}

// ---------------------------------------------------------------------------

Grading Grading::validate(FiniteRing ring, GradingGroup group,
                          std::vector<GradedComponent> components,
                          std::vector<std::string> tags) {
  const std::size_t n = ring.order();
  Grading g;
  g.ring_ = std::move(ring);
  g.group_ = std::move(group);
  g.tags_ = std::move(tags);
  const FiniteRing& r = g.ring_;

  for (auto& c : components) {
    c.degree = g.group_.reduce(std::move(c.degree));
    for (Element e : c.elements)
      if (e >= n)
        throw InvalidGrading("element", "element " + std::to_string(e) + " is not in the ring",
                             {e});
    if (!c.elements.contains(0))
      throw InvalidGrading("not-a-subgroup",
                           "component " + to_string(c.degree) + " does not contain 0");
    if (c.elements.size() < n) {
      std::vector<std::uint8_t> in(n, 0);
      for (Element a : c.elements) in[a] = 1;
      for (Element a : c.elements)
        for (Element b : c.elements)
          if (!in[r.add(a, b)])
            throw InvalidGrading("not-a-subgroup",
                                 "component " + to_string(c.degree) + " is not closed under +",
                                 {a, b});
    }
    if (c.elements.size() > 1) g.components_.push_back(std::move(c));
  }
  std::sort(g.components_.begin(), g.components_.end(),
            [](const auto& a, const auto& b) { return a.degree < b.degree; });
  for (std::size_t i = 1; i < g.components_.size(); ++i)
    if (g.components_[i].degree == g.components_[i - 1].degree)
      throw InvalidGrading("degree", "degree " + to_string(g.components_[i].degree) +
                                         " appears twice");

  // Direct sum: the sum map from the product of components is a bijection.
  const std::size_t k = g.components_.size();
  std::size_t product = 1;
  for (const auto& c : g.components_) {
    product *= c.elements.size();
    if (product > n) break;
  }
  if (product != n)
    throw InvalidGrading("not-direct-sum", "component sizes multiply to " +
                                               std::to_string(product) + ", ring order is " +
                                               std::to_string(n));
  g.decomposition_.assign(n * k, kNoElement);
  std::vector<std::size_t> digit(k, 0);
  for (std::size_t count = 0; count < n; ++count) {
    Element sum = 0;
    for (std::size_t j = 0; j < k; ++j) sum = r.add(sum, g.components_[j].elements[digit[j]]);
    if (k > 0 && g.decomposition_[sum * k] != kNoElement)
      throw InvalidGrading("not-direct-sum",
                           "element " + std::to_string(sum) + " has two decompositions", {sum});
    for (std::size_t j = 0; j < k; ++j)
      g.decomposition_[sum * k + j] = g.components_[j].elements[digit[j]];
    for (std::size_t j = 0; j < k; ++j) {
      if (++digit[j] < g.components_[j].elements.size()) break;
      digit[j] = 0;
    }
  }

  g.homogeneous_of_.assign(n, 0);
  for (std::size_t j = 0; j < k; ++j)
    for (Element e : g.components_[j].elements)
      if (e != 0) g.homogeneous_of_[e] = static_cast<std::uint32_t>(j + 1);

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const Degree target = g.group_.combine(g.components_[i].degree, g.components_[j].degree);
      const auto tc = g.find_component(target);
      if (tc && g.components_[*tc].elements.size() == n) continue;
      for (Element a : g.components_[i].elements)
        for (Element b : g.components_[j].elements) {
          Element p = r.mul(a, b);
          if (p == 0) continue;
          if (!tc || g.homogeneous_of_[p] != *tc + 1)
            throw InvalidGrading("multiplicativity",
                                 "product of degrees " + to_string(g.components_[i].degree) +
                                     " and " + to_string(g.components_[j].degree) +
                                     " leaves R_" + to_string(target),
                                 {a, b});
        }
    }

  if (n > 1) {
    const auto e = g.identity_component();
    if (!e || !g.components_[*e].elements.contains(r.one()))
      throw InvalidGrading("identity", "1 is not in the identity component");
  }
  return g;
}

std::optional<std::size_t> Grading::find_component(const Degree& degree) const {
  auto it = std::lower_bound(components_.begin(), components_.end(), degree,
                             [](const GradedComponent& c, const Degree& d) { return c.degree < d; });
  if (it == components_.end() || it->degree != degree) return std::nullopt;
  return static_cast<std::size_t>(it - components_.begin());
}

std::optional<std::size_t> Grading::identity_component() const {
  return find_component(group_.identity());
}

std::optional<std::size_t> Grading::component_of(Element a) const {
  if (homogeneous_of_[a] == 0) return std::nullopt;
  return homogeneous_of_[a] - 1;
}

bool Grading::is_homogeneous(Element a) const { return a == 0 || homogeneous_of_[a] != 0; }

std::map<Degree, Element> Grading::decompose(Element a) const {
  std::map<Degree, Element> out;
  for (std::size_t j = 0; j < components_.size(); ++j) {
    Element part = project(a, j);
    if (part != 0) out.emplace(components_[j].degree, part);
  }
  return out;
}

Grading trivial_grading(const FiniteRing& ring, GradingGroup group) {
  std::vector<GradedComponent> comps;
  comps.push_back({group.identity(), all_elements(ring)});
  return Grading::validate(ring, std::move(group), std::move(comps), ring.tags());
}

ElementSet homogeneous_elements(const Grading& grading) {
  std::vector<Element> out;
  for (Element a = 0; a < grading.ring().order(); ++a)
    if (grading.is_homogeneous(a)) out.push_back(a);
  return ElementSet(std::move(out));
}

ElementSet homogeneous_zero_divisors(const Grading& grading) {
  std::vector<Element> out;
  for (Element a = 0; a < grading.ring().order(); ++a)
    if (grading.is_homogeneous(a) && grading.ring().is_zero_divisor(a)) out.push_back(a);
  return ElementSet(std::move(out));
}

namespace {

ElementSet scaled_component(const Grading& grading, Element u) {
  const FiniteRing& r = grading.ring();
  std::vector<Element> out;
  const auto e = grading.identity_component();
  if (!e) return ElementSet();
  for (Element x : grading.components()[*e].elements) out.push_back(r.mul(x, u));
  return ElementSet(std::move(out));
}

}  // namespace

CrossedProductCheck is_crossed_product(const Grading& grading) {
  const FiniteRing& r = grading.ring();
  CrossedProductCheck out;
  for (const auto& c : grading.components()) {
    auto it = std::find_if(c.elements.begin(), c.elements.end(),
                           [&](Element a) { return r.is_unit(a); });
    if (it == c.elements.end()) {
      out.failing = c.degree;
      out.units.clear();
      return out;
    }
    out.units.push_back({c.degree, *it});
  }
  for (std::size_t j = 0; j < out.units.size(); ++j) {
    if (scaled_component(grading, out.units[j].element) != grading.components()[j].elements)
      throw InternalError("crossed product component " + to_string(out.units[j].degree) +
                          " is not R_e times its unit");
  }
  out.holds = true;
  return out;
}

Automorphism Automorphism::validate(const FiniteRing& ring, std::vector<Element> map) {
  const std::size_t n = ring.order();
  if (map.size() != n) throw PreconditionError("automorphism must map every element");
  std::vector<std::uint8_t> hit(n, 0);
  for (Element v : map) {
    if (v >= n || hit[v]) throw PreconditionError("automorphism must be a bijection");
    hit[v] = 1;
  }
  if (map[0] != 0 || map[ring.one()] != ring.one())
    throw PreconditionError("automorphism must fix 0 and 1");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (map[ring.add(a, b)] != ring.add(map[a], map[b]) ||
          map[ring.mul(a, b)] != ring.mul(map[a], map[b]))
        throw PreconditionError("map does not preserve the ring operations at (" +
                                std::to_string(a) + "," + std::to_string(b) + ")");
  Automorphism out;
  out.map_ = std::move(map);
  return out;
}

Automorphism Automorphism::inverse() const {
  Automorphism out;
  out.map_.assign(map_.size(), 0);
  for (Element a = 0; a < map_.size(); ++a) out.map_[map_[a]] = a;
  return out;
}

Grading transport_grading(const Grading& grading, const Automorphism& phi) {
  std::vector<GradedComponent> comps;
  for (const auto& c : grading.components()) {
    std::vector<Element> image;
    for (Element a : c.elements) image.push_back(phi(a));
    comps.push_back({c.degree, ElementSet(std::move(image))});
  }
  return Grading::validate(grading.ring(), grading.group(), std::move(comps), grading.tags());
}

bool is_graded_ideal(const Grading& grading, const Ideal& ideal) {
  for (Element a : ideal.elements)
    for (std::size_t j = 0; j < grading.support_size(); ++j)
      if (!ideal.contains(grading.project(a, j))) return false;
  return true;
}

HypothesisCheck check_t2_hypotheses(const Grading& grading) {
  const FiniteRing& r = grading.ring();
  HypothesisCheck out;
  const auto e = grading.identity_component();
  if (!e) {
    out.holds = true;  // zero ring: empty support
    return out;
  }
  const ElementSet& re = grading.components()[*e].elements;
  for (const auto& c : grading.components()) {
    std::optional<Element> found;
    if (c.elements.size() == re.size()) {
      for (Element u : c.elements) {
        if (u == 0) continue;
        bool faithful = std::none_of(re.begin(), re.end(),
                                     [&](Element x) { return x != 0 && r.mul(x, u) == 0; });
        if (faithful && scaled_component(grading, u) == c.elements) {
          found = u;
          break;
        }
      }
    }
    if (!found) {
      out.failing = c.degree;
      out.witnesses.clear();
      return out;
    }
    out.witnesses.push_back({c.degree, *found});
  }
  out.holds = true;
  return out;
}

bool check_t8_condition(const Grading& grading) {
  const ElementSet hz = homogeneous_zero_divisors(grading);
  return hz.empty() || (hz.size() == 1 && hz[0] == 0);
}

IdempotentAnnihilatorCheck check_t10_condition(const Grading& grading) {
  const FiniteRing& r = grading.ring();
  IdempotentAnnihilatorCheck out;
  std::vector<std::pair<Element, ElementSet>> multiples;
  for (Element b : idempotents(r)) multiples.emplace_back(b, principal_ideal(r, b).elements);
  for (Element a : homogeneous_elements(grading)) {
    const ElementSet ann = annihilator(r, std::span<const Element>(&a, 1)).elements;
    auto it = std::find_if(multiples.begin(), multiples.end(),
                           [&](const auto& m) { return m.second == ann; });
    if (it == multiples.end()) {
      out.failing = a;
      out.witnesses.clear();
      return out;
    }
    out.witnesses.emplace_back(a, it->first);
  }
  out.holds = true;
  return out;
}

}  // namespace emg
