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

#include "emgraded/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include <nlohmann/json.hpp>

#include "emgraded/error.hpp"

namespace emg {

Polynomial::Polynomial(std::vector<Element> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ElementSet Polynomial::coefficient_set() const {
  std::vector<Element> out;
  for (Element c : coeffs_)
    if (c != 0) out.push_back(c);
  return ElementSet(std::move(out));
}

void check_polynomial(const FiniteRing& ring, const Polynomial& f) {
  for (Element c : f.coefficients())
    if (c >= ring.order())
      throw PreconditionError("coefficient " + std::to_string(c) + " is not an element of a ring of order " +
                              std::to_string(ring.order()));
}

Polynomial poly_add(const FiniteRing& ring, const Polynomial& f, const Polynomial& g) {
  std::vector<Element> out(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ring.add(f[i], g[i]);
  return Polynomial(std::move(out));
}

Polynomial poly_mul(const FiniteRing& ring, const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Element> out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      out[i + j] = ring.add(out[i + j], ring.mul(f[i], g[j]));
  }
  return Polynomial(std::move(out));
}

Polynomial poly_scale(const FiniteRing& ring, Element c, const Polynomial& f) {
  std::vector<Element> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = ring.mul(c, f[i]);
  return Polynomial(std::move(out));
}

Ideal content_ideal(const FiniteRing& ring, const Polynomial& f) {
  return ideal_generated(ring, f.coefficient_set());
}

std::optional<Element> zero_divisor_witness(const FiniteRing& ring, const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("the zero polynomial has no zero-divisor status");
  const ElementSet coeffs = f.coefficient_set();
  return smallest_annihilating_element(ring, coeffs.ids());
}

std::optional<HomogeneousDegree> is_homogeneous(const Grading& grading, const Polynomial& f) {
  std::optional<std::size_t> component;
  for (Element c : f.coefficients()) {
    if (c == 0) continue;
    const auto j = grading.component_of(c);
    if (!j || (component && *component != *j)) return std::nullopt;
    component = j;
  }
  if (!component) return HomogeneousDegree{};
  return HomogeneousDegree{grading.components()[*component].degree};
}

bool content_is_graded(const Grading& grading, const Polynomial& f) {
  return is_graded_ideal(grading, content_ideal(grading.ring(), f));
}

std::optional<Polynomial> factor_by_content_generator(const FiniteRing& ring, const Polynomial& f,
                                                      Element a) {
  if (f.is_zero()) throw PreconditionError("factor_by_content_generator needs f != 0");
  if (!(content_ideal(ring, f).elements == principal_ideal(ring, a).elements))
    throw PreconditionError("C(f) is not generated by " + ring.label(a));

  std::vector<ElementSet> choices;
  for (Element c : f.coefficients()) choices.push_back(divisor_solutions(ring, a, c));

  // Representative combinations in canonical (odometer) order, bounded.
  constexpr std::size_t kMaxCombinations = 4096;
  std::vector<std::size_t> pick(choices.size(), 0);
  std::vector<Element> coeffs(choices.size());
  for (std::size_t tried = 0; tried < kMaxCombinations; ++tried) {
    for (std::size_t i = 0; i < choices.size(); ++i) coeffs[i] = choices[i][pick[i]];
    Polynomial g(coeffs);
    if (g.size() == f.size() && has_trivial_annihilator(ring, g.coefficient_set().ids()))
      return g;
    std::size_t i = choices.size();
    while (i-- > 0) {
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }

  for (std::size_t i = 0; i < choices.size(); ++i) coeffs[i] = choices[i][0];
  for (Element w : annihilator(ring, ElementSet{a}).elements)
    if (w != 0) coeffs.push_back(w);
  Polynomial g(coeffs);
  if (has_trivial_annihilator(ring, g.coefficient_set().ids())) return g;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

BivariatePolynomial::BivariatePolynomial(std::vector<Polynomial> y_coefficients)
    : coeffs_(std::move(y_coefficients)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ElementSet BivariatePolynomial::coefficient_set() const {
  std::vector<Element> out;
  for (const auto& p : coeffs_)
    for (Element c : p.coefficients())
      if (c != 0) out.push_back(c);
  return ElementSet(std::move(out));
}

BivariatePolynomial bivariate_scale(const FiniteRing& ring, Element c, const BivariatePolynomial& f) {
  std::vector<Polynomial> out;
  for (const auto& p : f.y_coefficients()) out.push_back(poly_scale(ring, c, p));
  return BivariatePolynomial(std::move(out));
}

Flattened kronecker_flatten(const BivariatePolynomial& f) {
  Flattened out;
  std::vector<Element> coeffs;
  for (const auto& block : f.y_coefficients()) {
    out.offsets.push_back(coeffs.size());
    const std::size_t len = std::max<std::size_t>(block.size(), 1);
    for (std::size_t i = 0; i < len; ++i) coeffs.push_back(block[i]);
  }
  out.poly = Polynomial(std::move(coeffs));
  return out;
}

BivariatePolynomial kronecker_unflatten(const Polynomial& g, const std::vector<std::size_t>& offsets) {
  std::vector<Polynomial> blocks;
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    const std::size_t begin = offsets[i];
    const std::size_t end = i + 1 < offsets.size() ? offsets[i + 1] : std::max(g.size(), begin);
    std::vector<Element> b;
    for (std::size_t k = begin; k < end; ++k) b.push_back(g[k]);
    blocks.emplace_back(std::move(b));
  }
  return BivariatePolynomial(std::move(blocks));
}

// ---------------------------------------------------------------------------

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Element lookup_coefficient(const FiniteRing& ring, const std::map<std::string, Element>& labels,
                           std::string text) {
  for (int pass = 0; pass < 2; ++pass) {
    if (auto it = labels.find(text); it != labels.end()) return it->second;
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
      text = text.substr(1, text.size() - 2);
  }
  if (!ring.has_labels() && all_digits(text)) {
    const unsigned long v = std::stoul(text);
    if (v < ring.order()) return static_cast<Element>(v);
  }
  // A parenthesized sum of labels, e.g. (2+Y).
  const auto parts = split_top_level(text, '+');
  if (parts.size() > 1) {
    Element sum = 0;
    for (const auto& p : parts) sum = ring.add(sum, lookup_coefficient(ring, labels, p));
    return sum;
  }
  throw SpecError("unknown coefficient '" + text + "'");
}

}  // namespace

Polynomial parse_polynomial(const FiniteRing& ring, const std::string& input) {
  const std::string text = strip(input);
  if (text.empty()) throw SpecError("empty polynomial literal");
  if (text.front() == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw SpecError(std::string("malformed coefficient list: ") + e.what());
    }
    std::vector<Element> coeffs;
    for (const auto& v : j) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= ring.order())
        throw SpecError("coefficient list entries must be element indices below " +
                        std::to_string(ring.order()));
      coeffs.push_back(v.get<Element>());
    }
    return Polynomial(std::move(coeffs));
  }

  std::map<std::string, Element> labels;
  for (Element a = 0; a < ring.order(); ++a) labels.emplace(ring.label(a), a);

  std::vector<Element> coeffs;
  for (const std::string& term : split_top_level(text, '+')) {
    if (term.empty()) throw SpecError("empty term in polynomial literal '" + input + "'");
    std::string coef = term;
    std::size_t deg = 0;
    const auto xpos = term.rfind('x');
    if (xpos != std::string::npos && term.find(')', xpos) == std::string::npos) {
      const std::string power = term.substr(xpos + 1);
      if (power.empty()) {
        deg = 1;
      } else if (power.size() > 1 && power[0] == '^' && all_digits(power.substr(1))) {
        deg = std::stoul(power.substr(1));
      } else {
        throw SpecError("malformed power in term '" + term + "'");
      }
      coef = term.substr(0, xpos);
      if (!coef.empty() && coef.back() == '*') coef.pop_back();
    }
    const Element c = coef.empty() ? ring.one() : lookup_coefficient(ring, labels, coef);
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
    coeffs[deg] = ring.add(coeffs[deg], c);
  }
  return Polynomial(std::move(coeffs));
}

std::string format_polynomial(const FiniteRing& ring, const Polynomial& f) {
  if (!ring.has_labels()) {
    std::string out = "[";
    for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + std::to_string(f[i]);
    return out + "]";
  }
  if (f.is_zero()) return ring.label(0);
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    const std::string power = i == 0 ? "" : i == 1 ? "x" : "x^" + std::to_string(i);
    std::string label = ring.label(f[i]);
    if (label.find('+') != std::string::npos) label = "(" + label + ")";
    std::string term;
    if (i == 0) term = label;
    else if (f[i] == ring.one()) term = power;
    else term = label + "*" + power;
    if (!out.empty()) out += "+";
    out += term;
  }
  return out;
}

std::string format_bivariate(const FiniteRing& ring, const BivariatePolynomial& f) {
  if (f.is_zero()) return format_polynomial(ring, {});
  std::string out;
  for (std::size_t i = 0; i < f.y_coefficients().size(); ++i) {
    const Polynomial& p = f[i];
    if (p.is_zero()) continue;
    std::string term = "(" + format_polynomial(ring, p) + ")";
    if (i == 1) term += "*y";
    if (i > 1) term += "*y^" + std::to_string(i);
    if (!out.empty()) out += "+";
    out += term;
  }
  return out;
}

}  // namespace emg
