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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "emgraded/ring.hpp"

namespace emg {

/// A degree in a finitely generated abelian group, as a coordinate vector.
using Degree = std::vector<std::int64_t>;

std::string to_string(const Degree& degree);

/// Z_{m1} x ... x Z_{mk}; a modulus of 0 denotes an infinite cyclic factor.
/// The empty modulus list is the trivial group.
class GradingGroup {
 public:
  GradingGroup() = default;
  explicit GradingGroup(std::vector<std::int64_t> moduli);

  const std::vector<std::int64_t>& moduli() const noexcept { return moduli_; }
  std::size_t rank() const noexcept { return moduli_.size(); }

  Degree identity() const { return Degree(moduli_.size(), 0); }
  /// Reduces each finite coordinate into [0, m). Throws SpecError on a
  /// length mismatch.
  Degree reduce(Degree degree) const;
  Degree combine(const Degree& a, const Degree& b) const;
  Degree inverse(const Degree& a) const;
  Degree difference(const Degree& a, const Degree& b) const {
    return combine(a, inverse(b));
  }

  friend bool operator==(const GradingGroup&, const GradingGroup&) = default;

 private:
  std::vector<std::int64_t> moduli_;
};

/// One nonzero homogeneous component R_sigma. `elements` always contains 0.
struct GradedComponent {
  Degree degree;
  ElementSet elements;
};

/// A validated G-grading R = (+)_{sigma} R_sigma. Only support components
/// are stored; every other degree has the zero component.
class Grading {
 public:
  /// Verifies every grading clause exhaustively and precomputes the
  /// decomposition of every element. Components equal to {0} are dropped.
  /// Throws InvalidGrading naming the violated clause.
  static Grading validate(FiniteRing ring, GradingGroup group,
                          std::vector<GradedComponent> components,
                          std::vector<std::string> tags = {});

  const FiniteRing& ring() const noexcept { return ring_; }
  const GradingGroup& group() const noexcept { return group_; }
  /// Support components sorted by degree.
  const std::vector<GradedComponent>& components() const noexcept { return components_; }
  std::size_t support_size() const noexcept { return components_.size(); }

  std::optional<std::size_t> find_component(const Degree& degree) const;
  /// Index of the R_e component (absent only for the zero ring).
  std::optional<std::size_t> identity_component() const;
  /// Component index of a nonzero homogeneous element.
  std::optional<std::size_t> component_of(Element a) const;
  bool is_homogeneous(Element a) const;

  /// The R_sigma part of `a` for support component `component`.
  Element project(Element a, std::size_t component) const {
    return decomposition_[a * components_.size() + component];
  }
  /// Unique decomposition; zero parts are omitted.
  std::map<Degree, Element> decompose(Element a) const;

  /// Provenance notes (e.g. truncation) carried into reports.
  const std::vector<std::string>& tags() const noexcept { return tags_; }

 private:
  FiniteRing ring_;
  GradingGroup group_;
  std::vector<GradedComponent> components_;
  std::vector<Element> decomposition_;       // order x support
  std::vector<std::uint32_t> homogeneous_of_;  // component index + 1, 0 if none
  std::vector<std::string> tags_;
};

/// R_e = R over the given group.
Grading trivial_grading(const FiniteRing& ring, GradingGroup group = {});

ElementSet homogeneous_elements(const Grading& grading);
ElementSet homogeneous_zero_divisors(const Grading& grading);

/// A per-component witness element.
struct ComponentWitness {
  Degree degree;
  Element element = kNoElement;
};

struct CrossedProductCheck {
  bool holds = false;
  /// On success, the smallest unit of every component.
  std::vector<ComponentWitness> units;
  /// On failure, the first component without a unit.
  std::optional<Degree> failing;
};

/// True iff every support component contains a unit. On success also checks
/// R_sigma = R_e * u for the reported unit and throws InternalError if not.
CrossedProductCheck is_crossed_product(const Grading& grading);

/// A validated ring automorphism as an index permutation.
class Automorphism {
 public:
  static Automorphism validate(const FiniteRing& ring, std::vector<Element> map);
  Element operator()(Element a) const noexcept { return map_[a]; }
  const std::vector<Element>& map() const noexcept { return map_; }
  Automorphism inverse() const;

 private:
  std::vector<Element> map_;
};

/// Components phi(R_sigma), keeping the degree labels.
Grading transport_grading(const Grading& grading, const Automorphism& phi);

/// I = (+)_sigma (I cap R_sigma).
bool is_graded_ideal(const Grading& grading, const Ideal& ideal);

struct HypothesisCheck {
  bool holds = false;
  std::vector<ComponentWitness> witnesses;
  std::optional<Degree> failing;
};

/// For every support component, some u in R_sigma with R_sigma = R_e * u and
/// Ann_{R_e}(u) = {0}; reports the smallest such u per component.
HypothesisCheck check_t2_hypotheses(const Grading& grading);

/// h(R) cap Z(R) = {0}.
bool check_t8_condition(const Grading& grading);

struct IdempotentAnnihilatorCheck {
  bool holds = false;
  /// Pairs (a, b): homogeneous a with Ann(a) = bR, b idempotent.
  std::vector<std::pair<Element, Element>> witnesses;
  std::optional<Element> failing;
};

/// Every homogeneous a has Ann(a) = bR for an idempotent b.
IdempotentAnnihilatorCheck check_t10_condition(const Grading& grading);

}  // namespace emg
