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

#include "emgraded/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "emgraded/error.hpp"

namespace emg {

namespace {

std::size_t checked_order(std::size_t base, std::size_t exponent,
                          const ConstructionOptions& options) {
  std::size_t order = 1;
  const std::size_t limit = std::min(options.max_order, kMaxTableOrder);
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && order > limit / base + 1) {
      throw CapExceeded("ring order " + std::to_string(base) + "^" + std::to_string(exponent) +
                        " exceeds the order cap " + std::to_string(limit));
    }
    order *= base;
  }
  if (order > limit)
    throw CapExceeded("ring order " + std::to_string(order) + " exceeds the order cap " +
                      std::to_string(limit));
  return order;
}

template <typename AddFn, typename MulFn>
RingTables build_tables(std::size_t n, AddFn&& add, MulFn&& mul) {
  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      t.add[a * n + b] = static_cast<TableEntry>(add(a, b));
      t.mul[a * n + b] = static_cast<TableEntry>(mul(a, b));
    }
  return t;
}

// Base-`radix` digit vectors of every index below radix^len.
std::vector<Element> digit_table(std::size_t radix, std::size_t len, std::size_t count) {
  std::vector<Element> digits(count * len);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t v = idx;
    for (std::size_t k = 0; k < len; ++k) {
      digits[idx * len + k] = static_cast<Element>(v % radix);
      v /= radix;
    }
  }
  return digits;
}

bool is_compound(const std::string& label) {
  return label.find_first_of("+,/ ") != std::string::npos && label.front() != '(';
}

// Formats sum_k coef_k * monomial_k from base labels.
std::string sum_label(const FiniteRing& base, const Element* coeffs,
                      const std::vector<std::string>& monomials) {
  std::string out;
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    const Element c = coeffs[k];
    if (c == 0) continue;
    std::string term;
    if (monomials[k].empty()) {
      term = base.label(c);
    } else if (c == base.one()) {
      term = monomials[k];
    } else {
      const std::string cl = base.label(c);
      term = (is_compound(cl) ? "(" + cl + ")" : cl) + monomials[k];
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out.empty() ? base.label(0) : out;
}

std::string power_name(const std::string& var, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

}  // namespace

FiniteRing cyclic(std::size_t n, const ConstructionOptions& options) {
  if (n == 0) throw PreconditionError("cyclic ring modulus must be at least 1");
  checked_order(n, 1, options);
  auto t = build_tables(
      n, [n](Element a, Element b) { return (a + b) % n; },
      [n](Element a, Element b) { return static_cast<Element>((std::uint64_t{a} * b) % n); });
  t.one = n == 1 ? 0 : 1;
  for (std::size_t i = 0; i < n; ++i) t.labels.push_back(std::to_string(i));
  return FiniteRing::validate(std::move(t));
}

// ---------------------------------------------------------------------------

std::vector<Element> ProductRing::to_tuple(Element a) const {
  std::vector<Element> out(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    out[i] = static_cast<Element>(a % factors[i].order());
    a /= static_cast<Element>(factors[i].order());
  }
  return out;
}

Element ProductRing::from_tuple(const std::vector<Element>& tuple) const {
  Element idx = 0;
  for (std::size_t i = 0; i < factors.size(); ++i)
    idx = static_cast<Element>(idx * factors[i].order() + tuple[i]);
  return idx;
}

ProductRing direct_product(std::vector<FiniteRing> factors, const ConstructionOptions& options) {
  if (factors.empty()) throw PreconditionError("direct product needs at least one factor");
  std::size_t n = 1;
  for (const auto& f : factors) {
    n *= f.order();
    if (n > std::min(options.max_order, kMaxTableOrder))
      throw CapExceeded("product order exceeds the order cap " +
                        std::to_string(options.max_order));
  }
  ProductRing out{FiniteRing{}, std::move(factors)};
  if (out.factors.size() == 1) {
    out.ring = out.factors.front();
    return out;
  }
  std::vector<std::vector<Element>> tuples(n);
  for (Element a = 0; a < n; ++a) tuples[a] = out.to_tuple(a);
  auto combine = [&](Element a, Element b, bool multiply) {
    std::vector<Element> r(out.factors.size());
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = multiply ? out.factors[i].mul(tuples[a][i], tuples[b][i])
                      : out.factors[i].add(tuples[a][i], tuples[b][i]);
    return out.from_tuple(r);
  };
  auto t = build_tables(
      n, [&](Element a, Element b) { return combine(a, b, false); },
      [&](Element a, Element b) { return combine(a, b, true); });
  std::vector<Element> ones;
  for (const auto& f : out.factors) ones.push_back(f.one());
  t.one = out.from_tuple(ones);
  for (Element a = 0; a < n; ++a) {
    std::string l = "(";
    for (std::size_t i = 0; i < out.factors.size(); ++i)
      l += (i ? "," : "") + out.factors[i].label(tuples[a][i]);
    t.labels.push_back(l + ")");
  }
  std::vector<std::string> tags;
  for (const auto& f : out.factors) tags.insert(tags.end(), f.tags().begin(), f.tags().end());
  out.ring = FiniteRing::validate(std::move(t)).with_tags(std::move(tags));
  return out;
}

// ---------------------------------------------------------------------------

FiniteRing poly_quotient_xn(const FiniteRing& base, std::size_t n,
                            const ConstructionOptions& options, const std::string& variable) {
  if (n < 2) throw PreconditionError("R[x]/(x^n) needs n >= 2");
  const std::size_t q = base.order();
  const std::size_t order = checked_order(q, n, options);
  const auto digits = digit_table(q, n, order);
  std::vector<Element> scratch(n);
  auto encode = [&](const std::vector<Element>& v) {
    std::size_t idx = 0;
    for (std::size_t k = n; k-- > 0;) idx = idx * q + v[k];
    return static_cast<Element>(idx);
  };
  auto t = build_tables(
      order,
      [&](Element a, Element b) {
        for (std::size_t k = 0; k < n; ++k)
          scratch[k] = base.add(digits[a * n + k], digits[b * n + k]);
        return encode(scratch);
      },
      [&](Element a, Element b) {
        std::fill(scratch.begin(), scratch.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
          const Element ai = digits[a * n + i];
          if (ai == 0) continue;
          for (std::size_t j = 0; i + j < n; ++j)
            scratch[i + j] = base.add(scratch[i + j], base.mul(ai, digits[b * n + j]));
        }
        return encode(scratch);
      });
  t.one = base.one();
  std::vector<std::string> monomials;
  for (std::size_t k = 0; k < n; ++k) monomials.push_back(power_name(variable, k));
  for (Element a = 0; a < order; ++a) t.labels.push_back(sum_label(base, &digits[a * n], monomials));
  return FiniteRing::validate(std::move(t)).with_tags(base.tags());
}

// ---------------------------------------------------------------------------

MonomialQuotient monomial_quotient(std::size_t modulus, std::size_t variables,
                                   const std::vector<Exponents>& relations,
                                   std::size_t truncation, const ConstructionOptions& options) {
  if (modulus == 0) throw PreconditionError("monomial quotient modulus must be at least 1");
  if (variables == 0) throw PreconditionError("monomial quotient needs at least one variable");
  for (const auto& r : relations)
    if (r.size() != variables)
      throw SpecError("relation monomial has " + std::to_string(r.size()) +
                      " exponents, expected " + std::to_string(variables));

  auto divisible = [&](const Exponents& e) {
    return std::any_of(relations.begin(), relations.end(), [&](const Exponents& r) {
      for (std::size_t i = 0; i < variables; ++i)
        if (r[i] > e[i]) return false;
      return true;
    });
  };
  auto total = [](const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::size_t{0}); };

  MonomialQuotient q;
  q.modulus = modulus;
  q.variables = variables;
  q.truncation = truncation;
  // Monomials by total degree, then lexicographically descending so x comes
  // before y within a degree.
  for (std::size_t deg = 0; deg <= truncation; ++deg) {
    std::vector<Exponents> level;
    Exponents e(variables, 0);
    auto rec = [&](auto&& self, std::size_t var, std::size_t left) -> void {
      if (var + 1 == variables) {
        e[var] = static_cast<std::uint32_t>(left);
        level.push_back(e);
        return;
      }
      for (std::size_t k = left + 1; k-- > 0;) {
        e[var] = static_cast<std::uint32_t>(k);
        self(self, var + 1, left - k);
      }
    };
    rec(rec, 0, deg);
    for (auto& m : level)
      if (!divisible(m)) q.basis.push_back(std::move(m));
  }

  const std::size_t b = q.basis.size();
  const std::size_t order = checked_order(modulus, b, options);
  std::map<Exponents, std::size_t> position;
  for (std::size_t i = 0; i < b; ++i) position[q.basis[i]] = i;
  struct Term {
    std::size_t i, j, k;
  };
  std::vector<Term> products;
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      Exponents e(variables);
      for (std::size_t v = 0; v < variables; ++v) e[v] = q.basis[i][v] + q.basis[j][v];
      if (total(e) > truncation || divisible(e)) continue;
      products.push_back({i, j, position.at(e)});
    }

  const auto digits = digit_table(modulus, b, order);
  std::vector<std::size_t> scratch(b);
  auto encode = [&] {
    std::size_t idx = 0;
    for (std::size_t k = b; k-- > 0;) idx = idx * modulus + scratch[k] % modulus;
    return static_cast<Element>(idx);
  };
  auto t = build_tables(
      order,
      [&](Element x, Element y) {
        for (std::size_t k = 0; k < b; ++k) scratch[k] = digits[x * b + k] + digits[y * b + k];
        return encode();
      },
      [&](Element x, Element y) {
        std::fill(scratch.begin(), scratch.end(), 0);
        for (const Term& p : products)
          scratch[p.k] += std::size_t{digits[x * b + p.i]} * digits[y * b + p.j];
        return encode();
      });
  const bool has_one = b > 0 && total(q.basis[0]) == 0 && modulus > 1;
  t.one = has_one ? 1 : 0;

  static const char* kNames[] = {"X", "Y", "Z"};
  std::vector<std::string> monomials;
  for (const auto& m : q.basis) {
    std::string s;
    for (std::size_t v = 0; v < variables; ++v) {
      const std::string var = variables <= 3 ? kNames[v] : "X" + std::to_string(v + 1);
      s += power_name(var, m[v]);
    }
    monomials.push_back(s);
  }
  const FiniteRing coeffs = cyclic(modulus, {std::max<std::size_t>(modulus, 1)});
  for (Element a = 0; a < order; ++a) t.labels.push_back(sum_label(coeffs, &digits[a * b], monomials));

  q.ring = FiniteRing::validate(std::move(t))
               .with_tags({"truncated at degree " + std::to_string(truncation)});
  return q;
}

// ---------------------------------------------------------------------------

FiniteRing idealization(const FiniteRing& base, const ConstructionOptions& options) {
  const std::size_t q = base.order();
  const std::size_t order = checked_order(q, 2, options);
  auto t = build_tables(
      order,
      [&](Element a, Element b) {
        return base.add(a % q, b % q) + q * base.add(a / q, b / q);
      },
      [&](Element a, Element b) {
        const Element r1 = a % q, m1 = a / q, r2 = b % q, m2 = b / q;
        return base.mul(r1, r2) + q * base.add(base.mul(r1, m2), base.mul(r2, m1));
      });
  t.one = base.one();
  for (Element a = 0; a < order; ++a)
    t.labels.push_back("(" + base.label(a % q) + "," + base.label(a / q) + ")");
  return FiniteRing::validate(std::move(t)).with_tags(base.tags());
}

// ---------------------------------------------------------------------------

FiniteRing group_ring(const FiniteRing& base, const std::vector<std::int64_t>& group,
                      const ConstructionOptions& options) {
  std::size_t g = 1;
  for (auto m : group) {
    if (m < 1) throw SpecError("group ring needs a finite group: moduli must be >= 1");
    g *= static_cast<std::size_t>(m);
    if (g > 64) throw CapExceeded("group order exceeds 64");
  }
  const std::size_t q = base.order();
  const std::size_t order = checked_order(q, g, options);
  const std::size_t rank = group.size();

  // Group elements mixed radix, first coordinate least significant.
  std::vector<std::vector<std::int64_t>> elems(g, std::vector<std::int64_t>(rank));
  for (std::size_t j = 0; j < g; ++j) {
    std::size_t v = j;
    for (std::size_t c = 0; c < rank; ++c) {
      elems[j][c] = static_cast<std::int64_t>(v % group[c]);
      v /= group[c];
    }
  }
  auto index_of = [&](const std::vector<std::int64_t>& e) {
    std::size_t idx = 0;
    for (std::size_t c = rank; c-- > 0;) idx = idx * group[c] + e[c];
    return idx;
  };
  std::vector<std::size_t> combine(g * g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      std::vector<std::int64_t> e(rank);
      for (std::size_t c = 0; c < rank; ++c) e[c] = (elems[i][c] + elems[j][c]) % group[c];
      combine[i * g + j] = index_of(e);
    }

  const auto digits = digit_table(q, g, order);
  std::vector<Element> scratch(g);
  auto encode = [&] {
    std::size_t idx = 0;
    for (std::size_t k = g; k-- > 0;) idx = idx * q + scratch[k];
    return static_cast<Element>(idx);
  };
  auto t = build_tables(
      order,
      [&](Element a, Element b) {
        for (std::size_t k = 0; k < g; ++k) scratch[k] = base.add(digits[a * g + k], digits[b * g + k]);
        return encode();
      },
      [&](Element a, Element b) {
        std::fill(scratch.begin(), scratch.end(), 0);
        for (std::size_t i = 0; i < g; ++i) {
          const Element ai = digits[a * g + i];
          if (ai == 0) continue;
          for (std::size_t j = 0; j < g; ++j) {
            const std::size_t k = combine[i * g + j];
            scratch[k] = base.add(scratch[k], base.mul(ai, digits[b * g + j]));
          }
        }
        return encode();
      });
  t.one = base.one();

  std::vector<std::string> names;
  for (std::size_t j = 0; j < g; ++j) {
    std::string s;
    for (std::size_t c = 0; c < rank; ++c)
      s += power_name(rank == 1 ? "s" : "s" + std::to_string(c + 1),
                      static_cast<std::size_t>(elems[j][c]));
    names.push_back(s);
  }
  for (Element a = 0; a < order; ++a) t.labels.push_back(sum_label(base, &digits[a * g], names));
  return FiniteRing::validate(std::move(t)).with_tags(base.tags());
}

// ---------------------------------------------------------------------------

ElementSet powers_of(const FiniteRing& ring, Element a) {
  std::vector<Element> out{ring.one()};
  std::vector<std::uint8_t> seen(ring.order(), 0);
  seen[ring.one()] = 1;
  Element p = a;
  while (!seen[p]) {
    seen[p] = 1;
    out.push_back(p);
    p = ring.mul(p, a);
  }
  return ElementSet(std::move(out));
}

Localization localization(const FiniteRing& base, const ElementSet& s_set,
                          const ConstructionOptions& options) {
  const std::size_t n = base.order();
  if (!s_set.contains(base.one()))
    throw PreconditionError("multiplicative set must contain 1");
  for (Element s : s_set)
    if (s >= n) throw PreconditionError("multiplicative set element out of range");
  for (Element s : s_set)
    for (Element t : s_set)
      if (!s_set.contains(base.mul(s, t)))
        throw PreconditionError("set is not multiplicatively closed: " + base.label(s) + "*" +
                                base.label(t) + " is missing");

  // Denominators with 1 first so that a/1 classes come first.
  std::vector<Element> denoms{base.one()};
  for (Element s : s_set)
    if (s != base.one()) denoms.push_back(s);
  std::vector<std::size_t> denom_pos(n, 0);
  for (std::size_t i = 0; i < denoms.size(); ++i) denom_pos[denoms[i]] = i;

  // (a,s) ~ (b,t) iff u(ta - sb) = 0 for some u in S.
  auto equivalent = [&](Element a, Element s, Element b, Element t) {
    const Element diff = base.sub(base.mul(t, a), base.mul(s, b));
    return std::any_of(s_set.begin(), s_set.end(),
                       [&](Element u) { return base.mul(u, diff) == 0; });
  };

  const std::size_t pairs = denoms.size() * n;
  std::vector<Element> class_of(pairs, kNoElement);
  std::vector<std::pair<Element, Element>> reps;
  const bool all_units = std::all_of(s_set.begin(), s_set.end(),
                                     [&](Element s) { return base.is_unit(s); });
  for (std::size_t p = 0; p < pairs; ++p) {
    const Element s = denoms[p / n], a = static_cast<Element>(p % n);
    if (s != base.one() && base.is_unit(s)) {
      // a/s = (a s^{-1})/1
      class_of[p] = class_of[base.mul(a, base.inverse(s))];
      continue;
    }
    for (std::size_t c = 0; c < reps.size() && !all_units; ++c)
      if (equivalent(a, s, reps[c].first, reps[c].second)) {
        class_of[p] = static_cast<Element>(c);
        break;
      }
    if (class_of[p] == kNoElement) {
      class_of[p] = static_cast<Element>(reps.size());
      reps.emplace_back(a, s);
      if (reps.size() > std::min(options.max_order, kMaxTableOrder))
        throw CapExceeded("localization exceeds the order cap");
    }
  }
  auto cls = [&](Element a, Element s) { return class_of[denom_pos[s] * n + a]; };

  const std::size_t k = reps.size();
  auto t = build_tables(
      k,
      [&](Element x, Element y) {
        auto [a, s] = reps[x];
        auto [b, u] = reps[y];
        return cls(base.add(base.mul(a, u), base.mul(b, s)), base.mul(s, u));
      },
      [&](Element x, Element y) {
        auto [a, s] = reps[x];
        auto [b, u] = reps[y];
        return cls(base.mul(a, b), base.mul(s, u));
      });
  t.one = cls(base.one(), base.one());
  for (auto [a, s] : reps) {
    if (s == base.one()) {
      t.labels.push_back(base.label(a));
    } else {
      auto wrap = [](const std::string& l) { return is_compound(l) ? "(" + l + ")" : l; };
      t.labels.push_back(wrap(base.label(a)) + "/" + wrap(base.label(s)));
    }
  }

  Localization out;
  out.ring = FiniteRing::validate(std::move(t)).with_tags(base.tags());
  out.multiplicative_set = s_set;
  out.representatives = std::move(reps);
  out.canonical_map.resize(n);
  for (Element a = 0; a < n; ++a) out.canonical_map[a] = cls(a, base.one());
  return out;
}

// ---------------------------------------------------------------------------
// Canonical gradings

namespace {

ElementSet scaled_copies(std::size_t count, std::size_t stride, std::size_t offset = 0) {
  std::vector<Element> out;
  for (std::size_t a = 0; a < count; ++a) out.push_back(static_cast<Element>(offset + a * stride));
  return ElementSet(std::move(out));
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

Grading xn_grading(const FiniteRing& ring, std::size_t base_order, std::size_t n) {
  std::vector<GradedComponent> comps;
  for (std::size_t k = 0; k < n; ++k)
    comps.push_back({{static_cast<std::int64_t>(k)}, scaled_copies(base_order, ipow(base_order, k))});
  return Grading::validate(ring, GradingGroup({static_cast<std::int64_t>(n)}), std::move(comps),
                           ring.tags());
}

Grading dual_number_grading(const FiniteRing& ring, const Grading& base) {
  const std::size_t q = base.ring().order();
  if (ring.order() != q * q) throw PreconditionError("ring is not R[x]/(x^2) over the base ring");
  std::vector<GradedComponent> comps;
  for (const auto& c : base.components()) {
    std::vector<Element> elems;
    for (Element a : c.elements)
      for (Element b : c.elements) elems.push_back(static_cast<Element>(a + q * b));
    comps.push_back({c.degree, ElementSet(std::move(elems))});
  }
  return Grading::validate(ring, base.group(), std::move(comps), ring.tags());
}

Grading groupring_grading(const FiniteRing& ring, std::size_t base_order,
                          const std::vector<std::int64_t>& group) {
  std::size_t g = 1;
  for (auto m : group) g *= static_cast<std::size_t>(m);
  std::vector<GradedComponent> comps;
  for (std::size_t j = 0; j < g; ++j) {
    Degree d(group.size());
    std::size_t v = j;
    for (std::size_t c = 0; c < group.size(); ++c) {
      d[c] = static_cast<std::int64_t>(v % group[c]);
      v /= group[c];
    }
    comps.push_back({d, scaled_copies(base_order, ipow(base_order, j))});
  }
  return Grading::validate(ring, GradingGroup(group), std::move(comps), ring.tags());
}

Grading idealization_grading(const FiniteRing& ring, std::size_t base_order) {
  std::vector<GradedComponent> comps;
  comps.push_back({{0}, scaled_copies(base_order, 1)});
  comps.push_back({{1}, scaled_copies(base_order, base_order)});
  return Grading::validate(ring, GradingGroup({2}), std::move(comps), ring.tags());
}

Grading product_grading(const ProductRing& product, const std::vector<Grading>& factors) {
  if (factors.size() != product.factors.size() || factors.empty())
    throw PreconditionError("one grading per product factor is required");
  const GradingGroup& group = factors.front().group();
  for (const auto& f : factors)
    if (!(f.group() == group)) throw PreconditionError("factor gradings use different groups");
  std::vector<Degree> degrees;
  for (const auto& f : factors)
    for (const auto& c : f.components()) degrees.push_back(c.degree);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  std::vector<GradedComponent> comps;
  for (const auto& d : degrees) {
    std::vector<std::vector<Element>> parts;
    for (const auto& f : factors) {
      auto j = f.find_component(d);
      parts.push_back(j ? f.components()[*j].elements.ids() : std::vector<Element>{0});
    }
    std::vector<Element> elems;
    std::vector<std::size_t> digit(parts.size(), 0);
    std::vector<Element> tuple(parts.size());
    while (true) {
      for (std::size_t i = 0; i < parts.size(); ++i) tuple[i] = parts[i][digit[i]];
      elems.push_back(product.from_tuple(tuple));
      std::size_t i = 0;
      for (; i < parts.size(); ++i) {
        if (++digit[i] < parts[i].size()) break;
        digit[i] = 0;
      }
      if (i == parts.size()) break;
    }
    comps.push_back({d, ElementSet(std::move(elems))});
  }
  return Grading::validate(product.ring, group, std::move(comps), product.ring.tags());
}

Grading localization_grading(const Localization& local, const Grading& base) {
  std::map<Degree, std::vector<Element>> comps;
  for (Element s : local.multiplicative_set) {
    if (s == 0) continue;  // 0 in S collapses the ring; nothing to grade
    const auto sc = base.component_of(s);
    if (!sc) throw PreconditionError("multiplicative set contains a non-homogeneous element");
    const Degree& ds = base.components()[*sc].degree;
    const Element inv_s = local.ring.inverse(local.canonical_map[s]);
    for (const auto& c : base.components()) {
      const Degree lambda = base.group().difference(c.degree, ds);
      auto& bucket = comps[lambda];
      for (Element a : c.elements) {
        bucket.push_back(local.ring.mul(local.canonical_map[a], inv_s));
      }
    }
  }
  std::vector<GradedComponent> out;
  for (auto& [d, elems] : comps) {
    elems.push_back(0);
    out.push_back({d, ElementSet(std::move(elems))});
  }
  return Grading::validate(local.ring, base.group(), std::move(out), local.ring.tags());
}

Grading truncated_monomial_grading(const MonomialQuotient& quotient) {
  std::vector<GradedComponent> comps;
  const std::size_t m = quotient.modulus;
  for (std::size_t k = 0; k < quotient.basis.size(); ++k) {
    Degree d(quotient.basis[k].begin(), quotient.basis[k].end());
    comps.push_back({d, scaled_copies(m, ipow(m, k))});
  }
  return Grading::validate(quotient.ring,
                           GradingGroup(std::vector<std::int64_t>(quotient.variables, 0)),
                           std::move(comps), quotient.ring.tags());
}

std::pair<Localization, Grading> graded_localization(const Grading& grading,
                                                     const ElementSet& s_set,
                                                     const ConstructionOptions& options) {
  for (Element s : s_set)
    if (!grading.is_homogeneous(s))
      throw PreconditionError("multiplicative set must consist of homogeneous elements");
  Localization local = localization(grading.ring(), s_set, options);
  Grading g = localization_grading(local, grading);
  return {std::move(local), std::move(g)};
}

}  // namespace emg
