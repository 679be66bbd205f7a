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
#include <vector>

#include "emgraded/grading.hpp"
#include "emgraded/ring.hpp"

namespace emg {

/// A polynomial over a FiniteRing in canonical trimmed form: coefficient i
/// is the coefficient of x^i and the last stored coefficient is nonzero.
/// The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Element> coefficients);
  Polynomial(std::initializer_list<Element> coefficients)
      : Polynomial(std::vector<Element>(coefficients)) {}

  static Polynomial constant(Element c) { return Polynomial({c}); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  Element operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  const std::vector<Element>& coefficients() const noexcept { return coeffs_; }
  /// Distinct nonzero coefficients.
  ElementSet coefficient_set() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Element> coeffs_;
};

/// Throws PreconditionError if some coefficient is not an element of `ring`.
void check_polynomial(const FiniteRing& ring, const Polynomial& f);

Polynomial poly_add(const FiniteRing& ring, const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const FiniteRing& ring, const Polynomial& f, const Polynomial& g);
Polynomial poly_scale(const FiniteRing& ring, Element c, const Polynomial& f);

/// C(f), the ideal generated by the coefficients. C(0) = {0}.
Ideal content_ideal(const FiniteRing& ring, const Polynomial& f);

/// Smallest nonzero r with r * C(f) = 0, i.e. the constant witness that f is
/// a zero divisor in R[x]. Throws PreconditionError for f = 0.
std::optional<Element> zero_divisor_witness(const FiniteRing& ring, const Polynomial& f);
inline bool is_zero_divisor_poly(const FiniteRing& ring, const Polynomial& f) {
  return zero_divisor_witness(ring, f).has_value();
}

/// Degree of a homogeneous polynomial. `degree` is empty for the zero
/// polynomial, which is homogeneous of every degree.
struct HomogeneousDegree {
  std::optional<Degree> degree;
};
std::optional<HomogeneousDegree> is_homogeneous(const Grading& grading, const Polynomial& f);

bool content_is_graded(const Grading& grading, const Polynomial& f);

/// For C(f) = aR, some g with f = a*g and C(g) = R. Representatives of each
/// a^{-1} f_i are tried in canonical order before falling back to appending
/// the nonzero elements of Ann(a) above deg f. Throws PreconditionError if
/// f = 0 or C(f) != aR.
std::optional<Polynomial> factor_by_content_generator(const FiniteRing& ring, const Polynomial& f,
                                                      Element a);

/// F(x, y) = sum_i f_i(x) y^i, trimmed in y.
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  explicit BivariatePolynomial(std::vector<Polynomial> y_coefficients);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int y_degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Polynomial>& y_coefficients() const noexcept { return coeffs_; }
  const Polynomial& operator[](std::size_t i) const { return coeffs_[i]; }
  ElementSet coefficient_set() const;

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  std::vector<Polynomial> coeffs_;
};

BivariatePolynomial bivariate_scale(const FiniteRing& ring, Element c, const BivariatePolynomial& f);

/// g(x) = f_0(x) + f_1(x) x^{o_1} + ... with o_{i+1} = o_i + deg f_i + 1 (a
/// zero block occupies one slot).
struct Flattened {
  Polynomial poly;
  std::vector<std::size_t> offsets;
};
Flattened kronecker_flatten(const BivariatePolynomial& f);

/// Cuts `g` at the offsets. The last block runs to the end of `g`, so a
/// cofactor longer than the flattened polynomial keeps its tail in the
/// highest y power.
BivariatePolynomial kronecker_unflatten(const Polynomial& g, const std::vector<std::size_t>& offsets);

/// `[c0,c1,...]` of element indices, or a sum of terms `coef`, `coef*x`,
/// `coef*x^k`, `x^k` using ring labels (e.g. `2+Y*x`, `(2+Y)*x^2`).
/// Throws SpecError on malformed input.
Polynomial parse_polynomial(const FiniteRing& ring, const std::string& text);

/// Label expression such as `2+Y*x` for labeled rings, index list otherwise.
std::string format_polynomial(const FiniteRing& ring, const Polynomial& f);
std::string format_bivariate(const FiniteRing& ring, const BivariatePolynomial& f);

}  // namespace emg
