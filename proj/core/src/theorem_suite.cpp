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

#include "emgraded/theorem_suite.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>

#include "emgraded/constructions.hpp"
#include "emgraded/error.hpp"
#include "emgraded/presets.hpp"

namespace emg {

std::vector<CorpusEntry> default_corpus(const std::vector<std::string>& names,
                                        std::optional<std::size_t> max_order) {
  std::vector<CorpusEntry> out;
  auto add = [&](const Preset& p) {
    GradedRing g = build_preset(p, max_order);
    if (!g.grading) throw SpecError("preset '" + p.name + "' has no canonical grading");
    out.push_back({p.name, *g.grading});
  };
  if (names.empty()) {
    for (const auto& p : presets()) add(p);
  } else {
    for (const auto& n : names) add(find_preset(n));
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

// Hypothesis/conclusion bookkeeping for one implication instance.
struct Judgement {
  Judgement(std::string check_name, std::string subject_name)
      : check(std::move(check_name)), subject(std::move(subject_name)) {}

  std::string check;
  std::string subject;
  Verdict hypothesis = Verdict::True;
  Verdict conclusion = Verdict::True;
  std::map<std::string, std::int64_t> bounds;
  Json detail;
  std::vector<std::string> notes;
  std::string failure_class = "implication-violation";
};

void merge_bounds(std::map<std::string, std::int64_t>& into, const PropertyReport& r) {
  for (const auto& [k, v] : r.bounds) {
    auto [it, inserted] = into.emplace(k, v);
    if (!inserted) it->second = std::max(it->second, v);
  }
}

Verdict from_bool(bool b) { return b ? Verdict::True : Verdict::False; }

class Suite {
 public:
  Suite(const std::vector<CorpusEntry>& corpus, const SuiteOptions& options)
      : corpus_(corpus), options_(options) {}

  SuiteResult run() {
    for (const auto& entry : corpus_) run_entry(entry);
    run_products();
    run_idealizations();
    return std::move(result_);
  }

 private:
  struct Cache {
    std::unique_ptr<ContentSearcher> searcher;
    std::optional<PropertyReport> em_graded;
  };

  Cache& cache(const Grading& g, const std::string& name) {
    auto& c = caches_[name];
    if (!c.searcher) c.searcher = std::make_unique<ContentSearcher>(g.ring());
    return c;
  }

  const PropertyReport& em_graded(const Grading& g, const std::string& name) {
    Cache& c = cache(g, name);
    if (!c.em_graded) c.em_graded = is_em_g_graded(g, options_.bounds, c.searcher.get());
    return *c.em_graded;
  }

  void record(Judgement j, Clock::time_point start) {
    PropertyReport r;
    r.property = j.check + "[" + j.subject + "]";
    std::string outcome;
    if (j.hypothesis == Verdict::False) {
      outcome = "vacuous";
    } else if (holds(j.conclusion)) {
      outcome = "consistent";
    } else if (j.hypothesis == Verdict::True) {
      outcome = "violation";
    } else {
      outcome = "inconclusive";
    }
    r.verdict = outcome == "violation" ? Verdict::False : Verdict::True;
    r.witness["outcome"] = outcome;
    r.witness["hypothesis"] = to_string(j.hypothesis);
    r.witness["conclusion"] = to_string(j.conclusion);
    if (outcome == "violation") r.witness["classification"] = j.failure_class;
    if (!j.detail.is_null()) r.witness["detail"] = std::move(j.detail);
    r.bounds = std::move(j.bounds);
    r.notes = std::move(j.notes);
    r.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (r.verdict == Verdict::False) ++result_.failures;
    result_.reports.push_back(std::move(r));
  }

  void run_entry(const CorpusEntry& e);
  void run_products();
  void run_idealizations();

  const std::vector<CorpusEntry>& corpus_;
  SuiteOptions options_;
  std::map<std::string, Cache> caches_;
  SuiteResult result_;
};

// Homogeneous polynomials of degree <= d with coefficients in `elems`, as
// code -> coefficient vector (constant coefficient varying fastest).
template <typename Visit>
void for_each_homogeneous(const std::vector<Element>& elems, std::size_t d, Visit&& visit) {
  std::vector<std::size_t> digit(d + 1, 0);
  std::vector<Element> coeffs(d + 1);
  while (true) {
    std::size_t i = 0;
    for (; i <= d; ++i) {
      if (++digit[i] < elems.size()) break;
      digit[i] = 0;
    }
    if (i > d) return;
    for (std::size_t k = 0; k <= d; ++k) coeffs[k] = elems[digit[k]];
    if (!visit(Polynomial(coeffs))) return;
  }
}

void Suite::run_entry(const CorpusEntry& e) {
  const Grading& g = e.grading;
  const FiniteRing& ring = g.ring();
  const std::size_t n = ring.order();
  const SearchBounds& bounds = options_.bounds;
  Cache& c = cache(g, e.name);
  const PropertyReport& em = em_graded(g, e.name);
  const auto tags = g.tags();

  // The component decider agrees with enumerating homogeneous polynomials.
  {
    auto start = Clock::now();
    Judgement j{"components-decide-graded-em", e.name};
    j.notes = tags;
    j.hypothesis = em.verdict;
    std::optional<Polynomial> direct_failure;
    std::size_t direct_degree = bounds.max_degree;
    for (const auto& comp : g.components()) {
      const auto& elems = comp.elements.ids();
      // Largest degree keeping the enumeration near 20000 polynomials.
      std::size_t d = 0;
      for (std::size_t count = elems.size(); d < bounds.max_degree && count * elems.size() <= 20000;
           count *= elems.size())
        ++d;
      direct_degree = std::min(direct_degree, d);
      for_each_homogeneous(elems, d, [&](const Polynomial& f) {
        if (!is_zero_divisor_poly(ring, f)) return true;
        if (!c.searcher->first_content(f.coefficient_set().ids())) {
          direct_failure = f;
          return false;
        }
        return true;
      });
      if (direct_failure) break;
    }
    j.bounds["max_degree"] = static_cast<std::int64_t>(direct_degree);
    if (em.verdict == Verdict::False) {
      // The decider's counterexample must re-check as a polynomial.
      const Polynomial f(em.witness.at("coefficients").get<std::vector<Element>>());
      const bool rechecks = is_zero_divisor_poly(ring, f) &&
                            !find_annihilating_content(ring, f, nullptr, c.searcher.get());
      j.hypothesis = Verdict::True;
      j.conclusion = from_bool(rechecks);
      j.detail["counterexample"] = em.witness;
    } else {
      // A direct failure contradicts a decider verdict of true.
      j.hypothesis = em.verdict;
      j.conclusion = from_bool(!direct_failure);
      if (direct_failure) j.detail["direct_counterexample"] = polynomial_json(ring, *direct_failure);
      if (direct_failure && em.verdict == Verdict::TrueUpToBounds &&
          direct_failure->coefficient_set().size() <=
              static_cast<std::size_t>(em.bounds.count("max_subset") ? em.bounds.at("max_subset") : 0))
        j.hypothesis = Verdict::True;
    }
    record(std::move(j), start);
  }

  const HypothesisCheck t2 = check_t2_hypotheses(g);

  // Regular elements of R_e[x] stay regular in R[x].
  {
    auto start = Clock::now();
    Judgement j{"regular-embedding", e.name};
    j.notes = tags;
    j.hypothesis = from_bool(t2.holds);
    if (t2.holds) {
      auto r = check_regular_embedding(g, bounds);
      j.conclusion = r.verdict;
      merge_bounds(j.bounds, r);
      if (r.verdict == Verdict::False) j.detail = r.witness;
    }
    record(std::move(j), start);
  }

  // Content ideals of homogeneous polynomials are graded.
  {
    auto start = Clock::now();
    Judgement j{"homogeneous-content-graded", e.name};
    j.notes = tags;
    j.conclusion = Verdict::True;
    for (const auto& comp : g.components()) {
      std::vector<Element> pool;
      for (Element a : comp.elements)
        if (a != 0) pool.push_back(a);
      const std::size_t cap = effective_subset_cap(bounds, pool.size());
      if (cap < pool.size()) {
        j.conclusion = Verdict::TrueUpToBounds;
        j.bounds["max_subset"] = static_cast<std::int64_t>(cap);
      }
      // Subsets by size, lexicographic.
      std::vector<std::size_t> idx;
      bool failed = false;
      for (std::size_t k = 1; k <= std::min(cap, pool.size()) && !failed; ++k) {
        idx.resize(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
          std::vector<Element> s;
          for (std::size_t i : idx) s.push_back(pool[i]);
          if (!content_is_graded(g, Polynomial(s))) {
            j.conclusion = Verdict::False;
            j.detail["coefficients"] = s;
            j.detail["degree"] = comp.degree;
            failed = true;
            break;
          }
          std::size_t i = k;
          while (i-- > 0 && idx[i] == pool.size() - k + i) {
          }
          if (i == static_cast<std::size_t>(-1)) break;
          ++idx[i];
          for (std::size_t m = i + 1; m < k; ++m) idx[m] = idx[m - 1] + 1;
        }
      }
      if (failed) break;
    }
    record(std::move(j), start);
  }

  // R_e EM together with unit-like generators u_sigma gives graded EM; a
  // crossed product supplies such generators.
  std::optional<PropertyReport> re_em;
  if (const auto ei = g.identity_component()) {
    const Subring re = subring(ring, g.components()[*ei].elements);
    re_em = is_em_ring(re.ring, bounds);
  }
  {
    auto start = Clock::now();
    Judgement j{"generator-hypotheses-imply-graded-em", e.name};
    j.notes = tags;
    j.hypothesis = t2.holds && re_em ? re_em->verdict : Verdict::False;
    j.conclusion = em.verdict;
    merge_bounds(j.bounds, em);
    if (re_em) merge_bounds(j.bounds, *re_em);
    if (!holds(em.verdict)) j.detail = em.witness;
    record(std::move(j), start);
  }
  {
    auto start = Clock::now();
    const CrossedProductCheck cp = is_crossed_product(g);
    Judgement j{"crossed-product-implies-graded-em", e.name};
    j.notes = tags;
    j.hypothesis = cp.holds && re_em ? re_em->verdict : Verdict::False;
    j.conclusion = em.verdict;
    merge_bounds(j.bounds, em);
    if (re_em) merge_bounds(j.bounds, *re_em);
    if (!holds(em.verdict)) j.detail = em.witness;
    record(std::move(j), start);
  }

  // Graded EM implies graded Armendariz.
  {
    auto start = Clock::now();
    Judgement j{"graded-em-implies-graded-armendariz", e.name};
    j.notes = tags;
    j.hypothesis = em.verdict;
    SearchBounds b = bounds;
    b.max_degree = std::min<std::size_t>(bounds.max_degree, n > options_.armendariz_max_order ? 2 : 3);
    b.max_degree = std::max<std::size_t>(b.max_degree, 1);
    auto r = is_armendariz_g_graded(g, b);
    j.conclusion = r.verdict;
    merge_bounds(j.bounds, r);
    if (r.verdict == Verdict::False) j.detail = r.witness;
    record(std::move(j), start);
  }

  // Localizing at homogeneous multiplicative sets keeps graded EM.
  {
    auto start = Clock::now();
    Judgement j{"localization-preserves-graded-em", e.name};
    j.notes = tags;
    j.hypothesis = em.verdict;
    j.conclusion = Verdict::True;
    std::vector<std::pair<std::string, ElementSet>> sets;
    std::vector<Element> hreg;
    for (Element a : homogeneous_elements(g))
      if (!ring.is_zero_divisor(a)) hreg.push_back(a);
    sets.emplace_back("homogeneous regular elements", ElementSet(hreg));
    if (n <= options_.localization_powers_max_order) {
      std::vector<ElementSet> seen;
      for (Element a : homogeneous_elements(g)) {
        if (a == 0) continue;
        ElementSet p = powers_of(ring, a);
        if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
        seen.push_back(p);
        sets.emplace_back("powers of " + ring.label(a), std::move(p));
      }
    }
    std::size_t checked = 0;
    for (const auto& [label, s] : sets) {
      auto [local, lg] = graded_localization(g, s, {std::max<std::size_t>(n, 1)});
      auto r = is_em_g_graded(lg, bounds);
      ++checked;
      merge_bounds(j.bounds, r);
      if (r.verdict == Verdict::TrueUpToBounds && j.conclusion == Verdict::True)
        j.conclusion = Verdict::TrueUpToBounds;
      if (r.verdict == Verdict::False) {
        j.conclusion = Verdict::False;
        j.detail["multiplicative_set"] = label;
        j.detail["counterexample"] = r.witness;
        break;
      }
    }
    j.notes.push_back("localizations checked: " + std::to_string(checked));
    record(std::move(j), start);
  }

  // Graded Bezout implies graded EM.
  if (n <= options_.bezout_max_order) {
    auto start = Clock::now();
    Judgement j{"graded-bezout-implies-graded-em", e.name};
    j.notes = tags;
    auto r = is_bezout_g_graded(g, options_.bezout_generators, bounds);
    j.hypothesis = r.verdict;
    j.conclusion = em.verdict;
    merge_bounds(j.bounds, r);
    merge_bounds(j.bounds, em);
    if (!holds(em.verdict)) j.detail = em.witness;
    record(std::move(j), start);
  }

  // Annihilators of homogeneous zero divisors are annihilators of constants.
  {
    auto start = Clock::now();
    Judgement j{"content-annihilator", e.name};
    j.notes = tags;
    j.failure_class = "internal-bug";
    auto r = verify_t5(g, bounds);
    const bool skipped = std::find(r.notes.begin(), r.notes.end(),
                                   "hypothesis not satisfied, check skipped") != r.notes.end();
    j.hypothesis = skipped ? Verdict::False : Verdict::True;
    j.conclusion = r.verdict;
    merge_bounds(j.bounds, r);
    if (r.verdict == Verdict::False) j.detail = r.witness;
    record(std::move(j), start);
  }

  // Graded EM passes to R[x] (bivariate, degree <= 1 in x and y).
  {
    auto start = Clock::now();
    Judgement j{"polynomial-extension", e.name};
    j.notes = tags;
    j.failure_class = "internal-bug";
    j.hypothesis = em.verdict;
    if (holds(em.verdict)) {
      auto r = verify_t7_bounded(g, bounds, c.searcher.get());
      j.conclusion = r.verdict;
      merge_bounds(j.bounds, r);
      if (r.verdict == Verdict::False) j.detail = r.witness;
    }
    record(std::move(j), start);
  }

  // R[X]/(X^2) with the induced grading.
  if (n <= options_.dual_number_max_order) {
    const FiniteRing dual = poly_quotient_xn(ring, 2, {n * n}, "X");
    const Grading dg = dual_number_grading(dual, g);
    const PropertyReport dual_em = is_em_g_graded(dg, bounds);
    {
      auto start = Clock::now();
      Judgement j{"dual-numbers-graded-em", e.name};
      j.notes = tags;
      j.hypothesis = from_bool(check_t8_condition(g));
      j.conclusion = dual_em.verdict;
      merge_bounds(j.bounds, dual_em);
      if (!holds(dual_em.verdict)) j.detail = dual_em.witness;
      record(std::move(j), start);
    }
    {
      auto start = Clock::now();
      Judgement j{"dual-numbers-graded-em-descends", e.name};
      j.notes = tags;
      j.hypothesis = dual_em.verdict;
      j.conclusion = em.verdict;
      merge_bounds(j.bounds, dual_em);
      merge_bounds(j.bounds, em);
      if (!holds(em.verdict)) j.detail = em.witness;
      record(std::move(j), start);
    }
  }

  // Idempotent-generated annihilators of homogeneous elements.
  {
    auto start = Clock::now();
    Judgement j{"idempotent-annihilators-imply-graded-em", e.name};
    j.notes = tags;
    j.hypothesis = from_bool(check_t10_condition(g).holds);
    j.conclusion = em.verdict;
    merge_bounds(j.bounds, em);
    if (!holds(em.verdict)) j.detail = em.witness;
    record(std::move(j), start);
  }

  // Transporting the grading along automorphisms.
  if (n <= options_.transport_max_order) {
    auto start = Clock::now();
    Judgement j{"automorphism-transport", e.name};
    j.notes = tags;
    j.hypothesis = em.verdict;
    j.conclusion = Verdict::True;
    std::size_t checked = 0;
    for (auto& map : automorphisms(ring, 4)) {
      const Automorphism phi = Automorphism::validate(ring, std::move(map));
      const Grading moved = transport_grading(g, phi);
      auto r = is_em_g_graded(moved, bounds);
      ++checked;
      merge_bounds(j.bounds, r);
      if (r.verdict == Verdict::TrueUpToBounds && j.conclusion == Verdict::True)
        j.conclusion = Verdict::TrueUpToBounds;
      if (r.verdict == Verdict::False) {
        j.conclusion = Verdict::False;
        j.detail["automorphism"] = phi.map();
        j.detail["counterexample"] = r.witness;
        break;
      }
    }
    j.notes.push_back("automorphisms checked: " + std::to_string(checked));
    record(std::move(j), start);
  }
}

// A product is graded EM iff every factor is.
void Suite::run_products() {
  for (std::size_t a = 0; a < corpus_.size(); ++a) {
    for (std::size_t b = a; b < corpus_.size(); ++b) {
      const Grading& ga = corpus_[a].grading;
      const Grading& gb = corpus_[b].grading;
      if (!(ga.group() == gb.group())) continue;
      if (ga.ring().order() * gb.ring().order() > options_.product_max_order) continue;
      auto start = Clock::now();
      const ProductRing p =
          direct_product({ga.ring(), gb.ring()}, {options_.product_max_order});
      const Grading pg = product_grading(p, {ga, gb});
      auto r = is_em_g_graded(pg, options_.bounds);
      const auto& ra = em_graded(ga, corpus_[a].name);
      const auto& rb = em_graded(gb, corpus_[b].name);
      const Verdict factors = !holds(ra.verdict) || !holds(rb.verdict) ? Verdict::False
                              : ra.verdict == Verdict::True && rb.verdict == Verdict::True
                                  ? Verdict::True
                                  : Verdict::TrueUpToBounds;
      const std::string subject = corpus_[a].name + " x " + corpus_[b].name;
      // Both directions of the equivalence.
      for (int dir = 0; dir < 2; ++dir) {
        Judgement j{dir == 0 ? "product-graded-em-from-factors" : "product-graded-em-to-factors",
                    subject};
        j.hypothesis = dir == 0 ? factors : r.verdict;
        j.conclusion = dir == 0 ? r.verdict : factors;
        merge_bounds(j.bounds, r);
        merge_bounds(j.bounds, ra);
        merge_bounds(j.bounds, rb);
        if (dir == 0 && !holds(r.verdict)) j.detail = r.witness;
        record(std::move(j), start);
      }
    }
  }
}

// R is EM iff R(+)R is graded EM with the Z2 grading.
void Suite::run_idealizations() {
  std::vector<std::string> seen;
  for (const auto& e : corpus_) {
    const FiniteRing& ring = e.grading.ring();
    if (ring.order() > options_.idealization_max_order) continue;
    auto start = Clock::now();
    const std::size_t n = ring.order();
    const FiniteRing h = idealization(ring, {n * n});
    const Grading hg = idealization_grading(h, n);
    auto graded = is_em_g_graded(hg, options_.bounds);
    auto plain = is_em_ring(ring, options_.bounds);
    {
      Judgement j{"idealization-graded-em-implies-em", e.name};
      j.hypothesis = graded.verdict;
      j.conclusion = plain.verdict;
      merge_bounds(j.bounds, graded);
      merge_bounds(j.bounds, plain);
      if (!holds(plain.verdict)) j.detail = plain.witness;
      record(std::move(j), start);
    }
    for (int dir = 0; dir < 2; ++dir) {
      Judgement j{dir == 0 ? "idealization-em-equivalence-forward"
                           : "idealization-em-equivalence-backward",
                  e.name};
      j.hypothesis = dir == 0 ? plain.verdict : graded.verdict;
      j.conclusion = dir == 0 ? graded.verdict : plain.verdict;
      merge_bounds(j.bounds, graded);
      merge_bounds(j.bounds, plain);
      const auto& failed = dir == 0 ? graded : plain;
      if (!holds(failed.verdict)) j.detail = failed.witness;
      record(std::move(j), start);
    }
  }
}

}  // namespace

SuiteResult theorem_suite(const std::vector<CorpusEntry>& corpus, const SuiteOptions& options) {
  return Suite(corpus, options).run();
}

}  // namespace emg
