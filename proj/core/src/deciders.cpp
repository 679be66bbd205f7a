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

#include "emgraded/deciders.hpp"

#include <algorithm>
#include <cmath>
#include <chrono>
#include <map>
#include <set>
#include <unordered_map>

#include "emgraded/constructions.hpp"
#include "emgraded/error.hpp"
#include "emgraded/parallel.hpp"

namespace emg {

namespace {

class Stopwatch {
 public:
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Nonempty subsets of {0..n-1} with at most k elements, by size and then
// lexicographically.
class Combinations {
 public:
  Combinations(std::size_t n, std::size_t k) : n_(n), k_(std::min(n, k)) {}

  bool next(std::vector<std::size_t>& out) {
    if (cur_.empty()) {
      if (k_ == 0 || done_) return false;
      cur_ = {0};
    } else if (!advance()) {
      if (cur_.size() >= k_) {
        done_ = true;
        return false;
      }
      const std::size_t size = cur_.size() + 1;
      cur_.resize(size);
      for (std::size_t i = 0; i < size; ++i) cur_[i] = i;
    }
    out = cur_;
    return true;
  }

 private:
  bool advance() {
    const std::size_t k = cur_.size();
    for (std::size_t i = k; i-- > 0;) {
      if (cur_[i] < n_ - (k - i)) {
        ++cur_[i];
        for (std::size_t j = i + 1; j < k; ++j) cur_[j] = cur_[j - 1] + 1;
        return true;
      }
    }
    return false;
  }

  std::size_t n_, k_;
  std::vector<std::size_t> cur_;
  bool done_ = false;
};

// Visits coefficient sets in canonical order in batches and returns the
// first one (with its 1-based position) for which `fails` holds.
template <typename Fails>
std::optional<std::pair<std::vector<Element>, std::size_t>> first_failing_set(
    const std::vector<Element>& pool, std::size_t cap, unsigned jobs, Fails&& fails,
    std::size_t* examined) {
  constexpr std::size_t kBatch = 2048;
  Combinations combos(pool.size(), cap);
  std::vector<std::vector<Element>> batch;
  std::vector<std::size_t> idx;
  std::size_t seen = 0;
  bool more = true;
  while (more) {
    batch.clear();
    while (batch.size() < kBatch && (more = combos.next(idx))) {
      std::vector<Element> s;
      for (std::size_t i : idx) s.push_back(pool[i]);
      batch.push_back(std::move(s));
    }
    auto hit = parallel_find_first(batch.size(), jobs, [&](std::size_t i) { return fails(batch[i]); });
    if (hit) {
      *examined = seen + *hit + 1;
      return std::make_pair(batch[*hit], seen + *hit + 1);
    }
    seen += batch.size();
  }
  *examined = seen;
  return std::nullopt;
}

Json labels_json(const FiniteRing& ring, const std::vector<Element>& elems) {
  Json out = Json::array();
  for (Element e : elems) out.push_back(ring.label(e));
  return out;
}

Polynomial polynomial_from_set(const std::vector<Element>& set) { return Polynomial(set); }

void append_tags(PropertyReport& report, const std::vector<std::string>& tags) {
  for (const auto& t : tags)
    if (std::find(report.notes.begin(), report.notes.end(), t) == report.notes.end())
      report.notes.push_back(t);
}

std::vector<Element> zero_divisor_pool(const FiniteRing& ring, const ElementSet& set) {
  std::vector<Element> pool;
  for (Element a : set)
    if (a != 0 && a < ring.order() && ring.is_zero_divisor(a)) pool.push_back(a);
  return pool;
}

}  // namespace

std::size_t effective_subset_cap(const SearchBounds& bounds, std::size_t pool_size) {
  if (bounds.max_subset) return *bounds.max_subset;
  return pool_size <= 12 ? pool_size : 4;
}

Json polynomial_json(const FiniteRing& ring, const Polynomial& f) {
  Json j;
  j["coefficients"] = f.coefficients();
  j["text"] = format_polynomial(ring, f);
  return j;
}

PropertyReport is_em_subset(const FiniteRing& ring, const ElementSet& subset,
                            const SearchBounds& bounds, const ContentSearcher* searcher,
                            const Grading* grading) {
  Stopwatch timer;
  std::unique_ptr<ContentSearcher> local;
  if (!searcher) {
    local = std::make_unique<ContentSearcher>(ring);
    searcher = local.get();
  }
  const std::vector<Element> pool = zero_divisor_pool(ring, subset);
  const std::size_t cap = effective_subset_cap(bounds, pool.size());

  auto fails = [&](const std::vector<Element>& s) {
    if (has_trivial_annihilator(ring, s)) return false;  // regular polynomial
    return !searcher->first_content(s).has_value();
  };
  std::size_t examined = 0;
  const auto hit = first_failing_set(pool, cap, bounds.jobs, fails, &examined);

  PropertyReport report;
  report.property = "em-subset";
  if (hit) {
    const Polynomial f = polynomial_from_set(hit->first);
    report.verdict = Verdict::False;
    report.witness = polynomial_json(ring, f);
    report.witness["coefficient_set"] = labels_json(ring, hit->first);
  } else if (cap < pool.size()) {
    report.verdict = Verdict::TrueUpToBounds;
    report.bounds["max_subset"] = static_cast<std::int64_t>(cap);
  } else {
    report.verdict = Verdict::True;
  }
  report.notes.push_back("coefficient sets examined: " + std::to_string(examined));

  if (bounds.report_homogeneous_content && grading) {
    std::vector<Element> hpool;
    for (Element h : homogeneous_zero_divisors(*grading))
      if (h != 0) hpool.push_back(h);
    std::size_t with_content = 0, with_homogeneous = 0;
    std::optional<std::vector<Element>> first_without;
    Combinations combos(pool.size(), cap);
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < examined && combos.next(idx); ++i) {
      std::vector<Element> s;
      for (std::size_t k : idx) s.push_back(pool[k]);
      if (has_trivial_annihilator(ring, s) || !searcher->first_content(s)) continue;
      ++with_content;
      if (searcher->first_content(s, &hpool)) {
        ++with_homogeneous;
      } else if (!first_without) {
        first_without = s;
      }
    }
    std::string note = "homogeneous content: " + std::to_string(with_homogeneous) + " of " +
                       std::to_string(with_content) + " coefficient sets with content";
    if (first_without) note += "; first without: " + labels_json(ring, *first_without).dump();
    report.notes.push_back(note);
  }
  append_tags(report, ring.tags());
  report.millis = timer.millis();
  return report;
}

PropertyReport is_em_ring(const FiniteRing& ring, const SearchBounds& bounds) {
  auto report = is_em_subset(ring, all_elements(ring), bounds);
  report.property = "em";
  return report;
}

PropertyReport is_em_g_graded(const Grading& grading, const SearchBounds& bounds,
                              const ContentSearcher* searcher) {
  Stopwatch timer;
  const FiniteRing& ring = grading.ring();
  std::unique_ptr<ContentSearcher> local;
  if (!searcher) {
    local = std::make_unique<ContentSearcher>(ring);
    searcher = local.get();
  }
  PropertyReport report;
  report.property = "em-graded";
  report.verdict = Verdict::True;
  std::size_t examined = 0;
  std::vector<std::string> homogeneous_notes;
  for (const auto& comp : grading.components()) {
    auto part = is_em_subset(ring, comp.elements, bounds, searcher, &grading);
    for (const auto& n : part.notes) {
      if (n.rfind("coefficient sets examined: ", 0) == 0)
        examined += std::stoull(n.substr(27));
      else if (n.rfind("homogeneous content: ", 0) == 0)
        homogeneous_notes.push_back("degree " + to_string(comp.degree) + " " + n);
    }
    if (part.verdict == Verdict::False) {
      report.verdict = Verdict::False;
      report.witness = part.witness;
      report.witness["degree"] = comp.degree;
      break;
    }
    if (part.verdict == Verdict::TrueUpToBounds) {
      report.verdict = Verdict::TrueUpToBounds;
      for (const auto& [k, v] : part.bounds) report.bounds[k] = std::max(report.bounds[k], v);
    }
  }
  if (report.verdict == Verdict::False) report.bounds.clear();
  report.notes.push_back("coefficient sets examined: " + std::to_string(examined));
  report.notes.insert(report.notes.end(), homogeneous_notes.begin(), homogeneous_notes.end());
  append_tags(report, grading.tags());
  append_tags(report, ring.tags());
  report.millis = timer.millis();
  return report;
}

// ---------------------------------------------------------------------------

namespace {

// Candidate polynomials per Armendariz check; pairs grow with its square.
constexpr double kArmendarizPolynomialLimit = 20000;

// Zero-divisor polynomials of degree <= d with coefficients in `pool` (which
// contains 0), constant coefficient varying fastest.
std::vector<Polynomial> zero_divisor_polynomials(const FiniteRing& ring,
                                                 const std::vector<Element>& pool, std::size_t d) {
  std::vector<Polynomial> out;
  std::vector<std::size_t> digit(d + 1, 0);
  std::vector<Element> coeffs(d + 1);
  while (true) {
    std::size_t i = 0;
    for (; i <= d; ++i) {
      if (++digit[i] < pool.size()) break;
      digit[i] = 0;
    }
    if (i > d) break;
    for (std::size_t k = 0; k <= d; ++k) coeffs[k] = pool[digit[k]];
    Polynomial f(coeffs);
    if (!has_trivial_annihilator(ring, f.coefficient_set().ids())) out.push_back(std::move(f));
  }
  return out;
}

PropertyReport armendariz_search(const FiniteRing& ring,
                                 const std::vector<std::vector<Element>>& pools,
                                 const SearchBounds& bounds, const std::string& property) {
  Stopwatch timer;
  if (bounds.max_degree < 1) throw PreconditionError("Armendariz checks need a degree bound of at least 1");
  auto enumeration_size = [&](std::size_t deg) {
    double total = 0;
    for (const auto& pool : pools) total += std::pow(static_cast<double>(pool.size()), double(deg + 1));
    return total;
  };
  std::size_t d = bounds.max_degree;
  while (d > 1 && enumeration_size(d) > kArmendarizPolynomialLimit) --d;
  if (enumeration_size(d) > kArmendarizPolynomialLimit)
    throw CapExceeded("Armendariz enumeration needs more than " +
                      std::to_string(static_cast<std::size_t>(kArmendarizPolynomialLimit)) +
                      " polynomials even at degree 1");
  std::vector<Polynomial> polys;
  bool any_zero_divisor = false;
  for (const auto& pool : pools) {
    if (pool.size() > 1) any_zero_divisor = true;
    auto part = zero_divisor_polynomials(ring, pool, d);
    polys.insert(polys.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
  }

  auto violation = [&](const Polynomial& f, const Polynomial& g)
      -> std::optional<std::pair<std::size_t, std::size_t>> {
    if (!poly_mul(ring, f, g).is_zero()) return std::nullopt;
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j)
        if (ring.mul(f[i], g[j]) != 0) return std::make_pair(i, j);
    return std::nullopt;
  };
  auto hit = parallel_find_first(polys.size(), bounds.jobs, [&](std::size_t i) {
    for (std::size_t j = i; j < polys.size(); ++j)
      if (violation(polys[i], polys[j])) return true;
    return false;
  });

  PropertyReport report;
  report.property = property;
  if (hit) {
    const Polynomial& f = polys[*hit];
    for (std::size_t j = *hit; j < polys.size(); ++j) {
      if (auto v = violation(f, polys[j])) {
        report.verdict = Verdict::False;
        report.witness["f"] = polynomial_json(ring, f);
        report.witness["g"] = polynomial_json(ring, polys[j]);
        report.witness["nonzero_product"] = {v->first, v->second};
        report.bounds["max_degree"] = static_cast<std::int64_t>(d);
        break;
      }
    }
  } else if (any_zero_divisor) {
    report.verdict = Verdict::TrueUpToBounds;
    report.bounds["max_degree"] = static_cast<std::int64_t>(d);
  } else {
    report.verdict = Verdict::True;
  }
  if (d < bounds.max_degree && report.verdict != Verdict::True)
    report.notes.push_back("degree bound lowered from " + std::to_string(bounds.max_degree) + " to " +
                           std::to_string(d) + " to fit the enumeration limit");
  append_tags(report, ring.tags());
  report.millis = timer.millis();
  return report;
}

}  // namespace

PropertyReport is_armendariz(const FiniteRing& ring, const SearchBounds& bounds) {
  return armendariz_search(ring, {zero_divisors(ring).ids()}, bounds, "armendariz");
}

PropertyReport is_armendariz_g_graded(const Grading& grading, const SearchBounds& bounds) {
  std::vector<std::vector<Element>> pools;
  const ElementSet zd = zero_divisors(grading.ring());
  for (const auto& c : grading.components()) pools.push_back(c.elements.intersect(zd).ids());
  auto report = armendariz_search(grading.ring(), pools, bounds, "armendariz-graded");
  if (report.verdict == Verdict::False) {
    if (auto j = grading.component_of(report.witness["f"]["coefficients"].back().get<Element>()))
      report.witness["f_degree"] = grading.components()[*j].degree;
    if (auto j = grading.component_of(report.witness["g"]["coefficients"].back().get<Element>()))
      report.witness["g_degree"] = grading.components()[*j].degree;
  }
  append_tags(report, grading.tags());
  return report;
}

// ---------------------------------------------------------------------------

PropertyReport is_bezout_g_graded(const Grading& grading, std::size_t max_generators,
                                  const SearchBounds& bounds) {
  (void)bounds;
  Stopwatch timer;
  if (max_generators < 2) throw PreconditionError("Bezout check needs at least 2 generators");
  const FiniteRing& ring = grading.ring();
  const std::size_t n = ring.order();

  // Distinct principal ideals with their smallest generator.
  std::map<std::vector<Element>, std::vector<Element>> principal;
  for (Element a = 0; a < n; ++a) {
    auto ideal = principal_ideal(ring, a).elements.ids();
    principal.emplace(std::move(ideal), std::vector<Element>{a});
  }
  auto ideal_sum = [&](const std::vector<Element>& i, const std::vector<Element>& j) {
    std::vector<std::uint8_t> mark(n, 0);
    for (Element a : i)
      for (Element b : j) mark[ring.add(a, b)] = 1;
    std::vector<Element> out;
    for (Element x = 0; x < n; ++x)
      if (mark[x]) out.push_back(x);
    return out;
  };

  PropertyReport report;
  report.property = "bezout-graded";
  std::map<std::vector<Element>, std::vector<Element>> known = principal;
  std::vector<std::vector<Element>> frontier;
  for (const auto& [ideal, gens] : principal) frontier.push_back(ideal);
  bool closed = false;
  for (std::size_t level = 2; level <= max_generators; ++level) {
    std::vector<std::vector<Element>> next;
    for (const auto& ideal : frontier) {
      for (const auto& [p, pgens] : principal) {
        auto sum = ideal_sum(ideal, p);
        if (known.count(sum)) continue;
        auto gens = known.at(ideal);
        gens.push_back(pgens.front());
        known.emplace(sum, gens);
        next.push_back(std::move(sum));
      }
    }
    std::sort(next.begin(), next.end());
    // Principal ideals that appear as sums need no check; others do.
    for (const auto& ideal : next) {
      Ideal I{ElementSet(ideal), known.at(ideal)};
      if (!is_graded_ideal(grading, I)) continue;
      if (!is_principal(ring, I)) {
        report.verdict = Verdict::False;
        report.witness["generators"] = I.generators;
        report.witness["generator_labels"] = labels_json(ring, I.generators);
        report.witness["ideal_size"] = I.size();
        append_tags(report, grading.tags());
        report.millis = timer.millis();
        return report;
      }
    }
    if (next.empty()) {
      closed = true;
      break;
    }
    frontier = std::move(next);
  }
  if (!closed) {
    // One more round decides whether the ideal lattice is exhausted.
    closed = std::all_of(frontier.begin(), frontier.end(), [&](const auto& ideal) {
      return std::all_of(principal.begin(), principal.end(),
                         [&](const auto& p) { return known.count(ideal_sum(ideal, p.first)) > 0; });
    });
  }
  report.verdict = closed ? Verdict::True : Verdict::TrueUpToBounds;
  if (!closed) report.bounds["max_generators"] = static_cast<std::int64_t>(max_generators);
  report.notes.push_back("distinct ideals generated: " + std::to_string(known.size()));
  append_tags(report, grading.tags());
  report.millis = timer.millis();
  return report;
}

// ---------------------------------------------------------------------------

PropertyReport check_regular_embedding(const Grading& grading, const SearchBounds& bounds) {
  Stopwatch timer;
  if (!check_t2_hypotheses(grading).holds)
    throw PreconditionError("regular embedding check needs the unit-like generator hypotheses");
  const FiniteRing& ring = grading.ring();
  const auto e = grading.identity_component();
  PropertyReport report;
  report.property = "regular-embedding";
  if (!e) {
    report.verdict = Verdict::True;
    return report;
  }
  const ElementSet& re = grading.components()[*e].elements;
  std::vector<Element> pool;
  for (Element a : re)
    if (a != 0) pool.push_back(a);
  const std::size_t cap = effective_subset_cap(bounds, pool.size());
  auto fails = [&](const std::vector<Element>& s) {
    const Ideal ann = annihilator(ring, s);
    if (ann.size() == 1) return false;
    return ann.elements.intersect(re).size() == 1;  // regular in R_e, not in R
  };
  std::size_t examined = 0;
  auto hit = first_failing_set(pool, cap, bounds.jobs, fails, &examined);
  if (hit) {
    report.verdict = Verdict::False;
    report.witness["coefficient_set"] = hit->first;
    report.witness["labels"] = labels_json(ring, hit->first);
  } else if (cap < pool.size()) {
    report.verdict = Verdict::TrueUpToBounds;
    report.bounds["max_subset"] = static_cast<std::int64_t>(cap);
  } else {
    report.verdict = Verdict::True;
  }
  report.notes.push_back("coefficient sets examined: " + std::to_string(examined));
  append_tags(report, grading.tags());
  report.millis = timer.millis();
  return report;
}

// ---------------------------------------------------------------------------

PropertyReport verify_t5(const Grading& grading, const SearchBounds& bounds) {
  Stopwatch timer;
  const FiniteRing& ring = grading.ring();
  const std::size_t n = ring.order();
  PropertyReport report;
  report.property = "content-annihilator";

  std::vector<Element> hreg;
  for (Element a : homogeneous_elements(grading))
    if (!ring.is_zero_divisor(a)) hreg.push_back(a);
  // A localization of a finite ring is a quotient of it, so the base order
  // is a safe cap.
  auto [local, local_grading] =
      graded_localization(grading, ElementSet(hreg), {std::max<std::size_t>(n, 1)});
  auto hypothesis = is_em_g_graded(local_grading, bounds);
  if (hypothesis.verdict == Verdict::False) {
    report.verdict = Verdict::True;
    report.notes.push_back("hypothesis not satisfied, check skipped");
    report.witness["hypothesis"] = to_json(hypothesis, false);
    append_tags(report, grading.tags());
    report.millis = timer.millis();
    return report;
  }
  if (hypothesis.verdict == Verdict::TrueUpToBounds)
    report.notes.push_back("hypothesis holds up to bounds");

  // Ann(c) for every c, bucketed by a hash of the sorted set.
  auto hash_of = [](const std::vector<Element>& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (Element e : s) h = (h ^ e) * 1099511628211ull;
    return h;
  };
  std::unordered_multimap<std::uint64_t, Element> by_hash;
  for (Element c = 0; c < n; ++c) {
    std::vector<Element> ann;
    auto row = ring.mul_row(c);
    for (Element t = 0; t < n; ++t)
      if (row[t] == 0) ann.push_back(t);
    by_hash.emplace(hash_of(ann), c);
  }
  auto matching_constant = [&](const std::vector<Element>& ann) -> std::optional<Element> {
    std::optional<Element> best;
    auto [lo, hi] = by_hash.equal_range(hash_of(ann));
    for (auto it = lo; it != hi; ++it) {
      if (best && *best < it->second) continue;
      if (annihilator(ring, ElementSet{it->second}).elements.ids() == ann) best = it->second;
    }
    return best;
  };

  std::optional<std::size_t> bounded_cap;
  for (const auto& comp : grading.components()) {
    const auto pool = zero_divisor_pool(ring, comp.elements);
    const std::size_t cap = effective_subset_cap(bounds, pool.size());
    if (cap < pool.size()) bounded_cap = std::max(bounded_cap.value_or(0), cap);
    auto fails = [&](const std::vector<Element>& s) {
      const Ideal ann = annihilator(ring, s);
      if (ann.size() == 1) return false;
      return !matching_constant(ann.elements.ids()).has_value();
    };
    std::size_t examined = 0;
    auto hit = first_failing_set(pool, cap, bounds.jobs, fails, &examined);
    if (hit) {
      report.verdict = Verdict::False;
      report.witness["degree"] = comp.degree;
      report.witness["coefficient_set"] = hit->first;
      report.witness["labels"] = labels_json(ring, hit->first);
      report.notes.push_back("internal-bug");
      append_tags(report, grading.tags());
      report.millis = timer.millis();
      return report;
    }
  }
  report.verdict = bounded_cap ? Verdict::TrueUpToBounds : Verdict::True;
  if (bounded_cap) report.bounds["max_subset"] = static_cast<std::int64_t>(*bounded_cap);
  append_tags(report, grading.tags());
  report.millis = timer.millis();
  return report;
}

// ---------------------------------------------------------------------------

PropertyReport verify_t7_bounded(const Grading& grading, const SearchBounds& bounds,
                                 const ContentSearcher* searcher) {
  Stopwatch timer;
  const FiniteRing& ring = grading.ring();
  std::unique_ptr<ContentSearcher> local;
  if (!searcher) {
    local = std::make_unique<ContentSearcher>(ring);
    searcher = local.get();
  }
  if (is_em_g_graded(grading, bounds, searcher).verdict == Verdict::False)
    throw PreconditionError("polynomial extension check needs a graded EM ring");

  PropertyReport report;
  report.property = "polynomial-extension";
  report.bounds["max_x_degree"] = 1;
  report.bounds["max_y_degree"] = 1;

  std::size_t checked = 0;
  for (const auto& comp : grading.components()) {
    const auto& elems = comp.elements.ids();
    const std::size_t m = elems.size();
    const std::size_t total = m * m * m * m;
    std::vector<BivariatePolynomial> cases;
    for (std::size_t code = 1; code < total; ++code) {
      std::size_t v = code;
      Element a[4];
      for (auto& x : a) {
        x = elems[v % m];
        v /= m;
      }
      BivariatePolynomial f({Polynomial({a[0], a[1]}), Polynomial({a[2], a[3]})});
      if (has_trivial_annihilator(ring, f.coefficient_set().ids())) continue;
      cases.push_back(std::move(f));
    }
    auto fails = [&](std::size_t i) {
      const BivariatePolynomial& f = cases[i];
      const Flattened flat = kronecker_flatten(f);
      const auto c = searcher->first_content(flat.poly.coefficient_set().ids());
      if (!c) return true;
      const Polynomial g1 = searcher->cofactor(*c, flat.poly);
      const BivariatePolynomial w = kronecker_unflatten(g1, flat.offsets);
      return !(bivariate_scale(ring, *c, w) == f) ||
             !has_trivial_annihilator(ring, w.coefficient_set().ids());
    };
    auto hit = parallel_find_first(cases.size(), bounds.jobs, fails);
    checked += hit ? *hit + 1 : cases.size();
    if (hit) {
      const BivariatePolynomial& f = cases[*hit];
      report.verdict = Verdict::False;
      report.witness["degree"] = comp.degree;
      report.witness["F"] = format_bivariate(ring, f);
      report.notes.push_back("internal-bug");
      break;
    }
  }
  if (report.verdict != Verdict::False) report.verdict = Verdict::TrueUpToBounds;
  report.notes.push_back("bivariate polynomials checked: " + std::to_string(checked));
  append_tags(report, grading.tags());
  report.millis = timer.millis();
  return report;
}

}  // namespace emg
