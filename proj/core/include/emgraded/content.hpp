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

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "emgraded/grading.hpp"
#include "emgraded/poly.hpp"
#include "emgraded/ring.hpp"

namespace emg {

/// f = c * g with c a nonzero zero divisor and g regular in R[x].
struct ContentWitness {
  Element c = kNoElement;
  Polynomial g;
  /// A homogeneous annihilating content, when a grading was supplied and one
  /// exists.
  std::optional<Element> homogeneous_c;
};

/// Annihilating-content search over coefficient sets, caching per-candidate
/// data (Ann(c), Ann(Ann(c)) and a smallest-preimage table for c*R).
///
/// For a candidate c the coefficient set S admits content c iff every s in
/// S lies in cR and no nonzero t kills all chosen preimages together with
/// Ann(c). The answer depends only on S, not on coefficient order,
/// multiplicity or the choice of preimages. Safe for concurrent use.
class ContentSearcher {
 public:
  explicit ContentSearcher(FiniteRing ring);
  ~ContentSearcher();
  ContentSearcher(const ContentSearcher&) = delete;
  ContentSearcher& operator=(const ContentSearcher&) = delete;

  const FiniteRing& ring() const noexcept { return ring_; }

  /// Z(R) \ {0} in canonical order.
  const std::vector<Element>& candidates() const noexcept { return candidates_; }

  /// Whether c is an annihilating content for any polynomial whose nonzero
  /// coefficients are exactly `coefficients`.
  bool accepts(Element c, std::span<const Element> coefficients) const;

  /// First accepting candidate among `pool` (defaults to all candidates).
  std::optional<Element> first_content(std::span<const Element> coefficients,
                                       const std::vector<Element>* pool = nullptr,
                                       unsigned jobs = 1) const;

  /// The cofactor for an accepted c: smallest preimages of the coefficients
  /// followed by the nonzero elements of Ann(c) above deg f.
  Polynomial cofactor(Element c, const Polynomial& f) const;

  const std::vector<Element>& annihilator_of(Element c) const;

 private:
  struct Candidate;
  const Candidate& data(Element c) const;

  FiniteRing ring_;
  std::vector<Element> candidates_;
  std::unique_ptr<Candidate[]> cache_;
};

/// Searches c over Z(R) \ {0} in canonical order and returns the first
/// witness, re-validating every witness invariant (InternalError on
/// failure). With a grading, also reports the first homogeneous c.
/// Throws PreconditionError when f = 0 or f is regular.
std::optional<ContentWitness> find_annihilating_content(const FiniteRing& ring,
                                                        const Polynomial& f,
                                                        const Grading* grading = nullptr,
                                                        const ContentSearcher* searcher = nullptr,
                                                        unsigned jobs = 1);

/// Independent check of the witness invariants for f.
bool witness_is_valid(const FiniteRing& ring, const Polynomial& f, const ContentWitness& w);

}  // namespace emg
