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

#include <optional>
#include <string>

#include "emgraded/constructions.hpp"
#include "emgraded/grading.hpp"
#include "emgraded/report.hpp"

namespace emg {

/// A constructed ring with its canonical grading, if the construction has
/// one (products of differently graded factors do not).
struct GradedRing {
  FiniteRing ring;
  std::optional<Grading> grading;
};

/// Builds a ring from a construction document such as
/// `{"kind":"polyQuotientXn","base":{"kind":"cyclic","n":4},"n":2}`.
/// Kinds: cyclic, product, polyQuotientXn, monomialQuotient, idealization,
/// groupRing, localization. Throws SpecError on malformed documents.
GradedRing build_construction(const Json& spec, const ConstructionOptions& options = {});

/// Relation monomial such as "xy" or "x^2z" over variables x, y, z (or
/// x1..xv when v > 3). Throws SpecError for anything that is not a single
/// monic monomial.
Exponents parse_monomial(const std::string& text, std::size_t variables);

/// `{"order", "add", "mul", "zero", "one", "labels"}` with row-major 2D
/// tables.
Json ring_to_json(const FiniteRing& ring);
FiniteRing ring_from_json(const Json& json);

/// `{"moduli": [...], "components": [{"degree": [...], "elements": [...]}]}`.
Json grading_to_json(const Grading& grading);
Grading grading_from_json(const FiniteRing& ring, const Json& json);

}  // namespace emg
