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
#include <string>
#include <vector>

#include "emgraded/grading.hpp"
#include "emgraded/ring.hpp"

namespace emg {

struct ConstructionOptions {
  /// Constructors refuse to materialize rings larger than this.
  std::size_t max_order = 4096;
};

/// Z_n with residue i at index i.
FiniteRing cyclic(std::size_t n, const ConstructionOptions& options = {});

/// R_1 x ... x R_k with componentwise tables. Element index is mixed radix
/// with the first factor most significant.
struct ProductRing {
  FiniteRing ring;
  std::vector<FiniteRing> factors;

  std::vector<Element> to_tuple(Element a) const;
  Element from_tuple(const std::vector<Element>& tuple) const;
};
ProductRing direct_product(std::vector<FiniteRing> factors,
                           const ConstructionOptions& options = {});

/// R[x]/(x^n). Element a_0 + a_1 x + ... has index sum a_k |R|^k.
FiniteRing poly_quotient_xn(const FiniteRing& base, std::size_t n,
                            const ConstructionOptions& options = {},
                            const std::string& variable = "Y");

using Exponents = std::vector<std::uint32_t>;

/// Z_m[x_1..x_v] / (relation monomials, every monomial of total degree > d).
struct MonomialQuotient {
  FiniteRing ring;
  std::size_t modulus = 0;
  std::size_t variables = 0;
  std::size_t truncation = 0;
  /// Surviving monomials; element index is sum c_k m^k over this basis.
  std::vector<Exponents> basis;
};
MonomialQuotient monomial_quotient(std::size_t modulus, std::size_t variables,
                                   const std::vector<Exponents>& relations,
                                   std::size_t truncation,
                                   const ConstructionOptions& options = {});

/// R(+)R with (r1,m1)(r2,m2) = (r1 r2, r1 m2 + r2 m1). Pair (r, m) has index
/// r + |R| m.
FiniteRing idealization(const FiniteRing& base, const ConstructionOptions& options = {});

/// R[G] for G = Z_{m1} x ... x Z_{mk} (all m_i >= 1). Group elements are
/// enumerated mixed radix with the first coordinate least significant;
/// sum_g c_g g has index sum c_g |R|^{index(g)}.
FiniteRing group_ring(const FiniteRing& base, const std::vector<std::int64_t>& group,
                      const ConstructionOptions& options = {});

/// S^{-1}R for a multiplicatively closed S containing 1.
struct Localization {
  FiniteRing ring;
  ElementSet multiplicative_set;
  /// a |-> a/1.
  std::vector<Element> canonical_map;
  /// A representative (a, s) of every class, in class order.
  std::vector<std::pair<Element, Element>> representatives;
};
Localization localization(const FiniteRing& base, const ElementSet& multiplicative_set,
                          const ConstructionOptions& options = {});

/// {1, a, a^2, ...}.
ElementSet powers_of(const FiniteRing& ring, Element a);

// ---------------------------------------------------------------------------
// Canonical gradings

/// H_k = R x^k over Z_n for a ring built by poly_quotient_xn.
Grading xn_grading(const FiniteRing& ring, std::size_t base_order, std::size_t n);

/// R[x]/(x^2) graded by the base grading: a + bX is homogeneous of degree
/// sigma iff a, b are in R_sigma.
Grading dual_number_grading(const FiniteRing& ring, const Grading& base);

/// H_sigma = R sigma over G for a ring built by group_ring.
Grading groupring_grading(const FiniteRing& ring, std::size_t base_order,
                          const std::vector<std::int64_t>& group);

/// H_0 = R (+) 0, H_1 = 0 (+) R over Z_2 for a ring built by idealization.
Grading idealization_grading(const FiniteRing& ring, std::size_t base_order);

/// R_g = prod (R_alpha)_g. All factor gradings must share one group.
Grading product_grading(const ProductRing& product, const std::vector<Grading>& factors);

/// (S^{-1}R)_lambda = { a/s : deg a - deg s = lambda } for S in h(R).
Grading localization_grading(const Localization& local, const Grading& base);

/// Z^v-grading by exponent vector; tagged "truncated at degree d".
Grading truncated_monomial_grading(const MonomialQuotient& quotient);

/// Localizes at a homogeneous multiplicatively closed set and returns the
/// ring with its induced grading. Throws PreconditionError if S is not in h(R).
std::pair<Localization, Grading> graded_localization(const Grading& grading,
                                                     const ElementSet& multiplicative_set,
                                                     const ConstructionOptions& options = {});

}  // namespace emg
