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

#include <cstddef>
#include <optional>

#include "emgraded/content.hpp"
#include "emgraded/grading.hpp"
#include "emgraded/report.hpp"

namespace emg {

struct SearchBounds {
  /// Largest coefficient set examined; unset means every set when the
  /// candidate pool has at most 12 elements and 4 otherwise.
  std::optional<std::size_t> max_subset;
  /// Degree bound for polynomial enumeration.
  std::size_t max_degree = 3;
  unsigned jobs = 1;
  /// Also record whether a homogeneous annihilating content exists.
  bool report_homogeneous_content = false;
};

std::size_t effective_subset_cap(const SearchBounds& bounds, std::size_t pool_size);

/// Every zero-divisor polynomial with coefficients in H has an annihilating
/// content (searched over all of Z(R) \ {0}). Decided over coefficient sets
/// S of H cap Z(R) \ {0} with Ann(S) != 0; a failing S yields the
/// counterexample sum s_i x^i.
///
/// `searcher` may be shared between calls on the same ring. `grading` is
/// only used for homogeneous-content reporting.
PropertyReport is_em_subset(const FiniteRing& ring, const ElementSet& subset,
                            const SearchBounds& bounds,
                            const ContentSearcher* searcher = nullptr,
                            const Grading* grading = nullptr);

PropertyReport is_em_ring(const FiniteRing& ring, const SearchBounds& bounds);

/// Every nonzero homogeneous zero-divisor polynomial has an annihilating
/// content; decided component by component.
PropertyReport is_em_g_graded(const Grading& grading, const SearchBounds& bounds,
                              const ContentSearcher* searcher = nullptr);

/// fg = 0 implies a_i b_j = 0 for all pairs of degree <= bounds.max_degree.
PropertyReport is_armendariz(const FiniteRing& ring, const SearchBounds& bounds);
/// The same restricted to homogeneous f and g.
PropertyReport is_armendariz_g_graded(const Grading& grading, const SearchBounds& bounds);

/// Every graded ideal generated by at most `max_generators` elements is
/// principal. Exhaustive (verdict true) once the generated ideals stop
/// growing.
PropertyReport is_bezout_g_graded(const Grading& grading, std::size_t max_generators,
                                  const SearchBounds& bounds);

/// For coefficient sets S of R_e with Ann_{R_e}(S) = 0, checks Ann_R(S) = 0.
/// Throws PreconditionError unless check_t2_hypotheses holds.
PropertyReport check_regular_embedding(const Grading& grading, const SearchBounds& bounds);

/// When the localization at homogeneous regular elements is graded EM,
/// every homogeneous zero-divisor coefficient set S has some c in R with
/// Ann(S) = Ann(c). Skipped (verdict true, noted) when the hypothesis fails.
PropertyReport verify_t5(const Grading& grading, const SearchBounds& bounds);

/// Homogeneous bivariate zero divisors F of x- and y-degree <= 1: flattens,
/// finds content, unflattens and checks F = c * W with Ann(C(W)) = 0.
/// Throws PreconditionError unless the grading is graded EM.
PropertyReport verify_t7_bounded(const Grading& grading, const SearchBounds& bounds,
                                 const ContentSearcher* searcher = nullptr);

/// Coefficient list and display form of a polynomial for report witnesses.
Json polynomial_json(const FiniteRing& ring, const Polynomial& f);

}  // namespace emg
