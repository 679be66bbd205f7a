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

// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "emgraded/constructions.hpp"
#include "emgraded/content.hpp"
#include "emgraded/deciders.hpp"
#include "emgraded/theorem_suite.hpp"
#include "oracles/brute_force.hpp"
#include "support/fixtures.hpp"

using namespace emg;
using testing_support::preset;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> problems;
  std::string summary;
  Json evidence = Json::array();

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      problems.push_back(what);
    }
  }
  void keep(const PropertyReport& r) { evidence.push_back(to_json(r, false)); }
};

SearchBounds with_jobs(unsigned jobs) {
  SearchBounds b;
  b.jobs = jobs;
  return b;
}

bool has_note(const PropertyReport& r, const std::string& needle) {
  for (const auto& n : r.notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}

Outcome c1(unsigned jobs) {
  Outcome o;
  const auto& e1 = preset("e1");
  auto em = is_em_ring(e1.ring, with_jobs(jobs));
  o.keep(em);
  o.require(em.verdict == Verdict::False, "is_em_ring(e1) is not false");
  const Polynomial f = parse_polynomial(e1.ring, "2+Y*x");
  auto w = find_annihilating_content(e1.ring, f, nullptr, nullptr, jobs);
  o.require(!w, "2+Yx has an annihilating content");
  o.evidence.push_back(w ? Json(w->c) : Json());
  auto graded = is_em_g_graded(*e1.grading, with_jobs(jobs));
  o.keep(graded);
  o.require(graded.verdict == Verdict::True && graded.bounds.empty(),
            "is_em_g_graded(e1) is not an exhaustive true");
  return o;
}

Outcome c2(unsigned jobs) {
  Outcome o;
  std::vector<std::pair<std::string, FiniteRing>> rings{
      {"Z2", cyclic(2)}, {"Z3", cyclic(3)}, {"Z4", cyclic(4)}, {"Z6", cyclic(6)},
      {"Z2xZ2", direct_product({cyclic(2), cyclic(2)}).ring}};
  for (const auto& [name, r] : rings) {
    auto em = is_em_ring(r, with_jobs(jobs));
    const auto ide = idealization(r);
    auto graded = is_em_g_graded(idealization_grading(ide, r.order()), with_jobs(jobs));
    o.keep(em);
    o.keep(graded);
    o.require(em.verdict == graded.verdict,
              name + ": em " + to_string(em.verdict) + " vs graded " + to_string(graded.verdict));
  }
  return o;
}

Outcome c3(unsigned jobs) {
  Outcome o;
  auto z4 = is_em_ring(cyclic(4), with_jobs(jobs));
  o.keep(z4);
  o.require(z4.verdict == Verdict::True, "Z4 is not EM");
  for (std::size_t n : {2, 3}) {
    auto r = poly_quotient_xn(cyclic(4), n);
    auto g = is_em_g_graded(xn_grading(r, 4, n), with_jobs(jobs));
    o.keep(g);
    o.require(g.verdict == Verdict::True, "Z4[x]/(x^" + std::to_string(n) + ") graded EM is " +
                                              to_string(g.verdict));
  }
  return o;
}

Outcome c4(unsigned jobs) {
  Outcome o;
  const auto& e2 = preset("e2-trunc-d2");
  const auto t2 = check_t2_hypotheses(*e2.grading);
  o.require(t2.holds, "components are not generated by regular elements");
  o.evidence.push_back(t2.holds);
  auto g = is_em_g_graded(*e2.grading, with_jobs(jobs));
  o.keep(g);
  o.require(holds(g.verdict), "graded EM is false on the truncated ring");
  o.require(has_note(g, "truncated at degree 2"), "report lacks the truncation label");
  return o;
}

Outcome c5(unsigned jobs) {
  Outcome o;
  std::mt19937_64 rng(5005);
  std::size_t total = 0, disagreements = 0;
  for (const auto& name : testing_support::small_presets(16)) {
    const FiniteRing& r = preset(name).ring;
    const auto all = all_elements(r).ids();
    const auto z = zero_divisors(r).ids();
    std::size_t zd = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto& pool = (i % 2 == 0 && z.size() > 1) ? z : all;
      const auto f = testing_support::sample(rng, pool, 1 + i % 4);
      const bool fast = is_zero_divisor_poly(r, Polynomial(f));
      const bool slow = oracle::polynomial_annihilator(r, f, 3).has_value();
      disagreements += fast != slow;
      zd += fast;
      ++total;
    }
    o.evidence.push_back({{"ring", name}, {"zero_divisors", zd}});
  }
  (void)jobs;
  o.summary = std::to_string(total) + " polynomials";
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements in " +
                                    std::to_string(total) + " polynomials");
  return o;
}

Outcome c6(unsigned jobs) {
  Outcome o;
  std::mt19937_64 rng(6006);
  std::size_t total = 0, bad = 0, invalid = 0;
  for (const auto& name : testing_support::small_presets(16)) {
    const FiniteRing& r = preset(name).ring;
    const auto z = zero_divisors(r).ids();
    if (z.size() < 2) continue;
    ContentSearcher searcher(r);
    Json found = Json::array();
    std::size_t n = 0;
    while (n < 1000) {
      const Element t = z[1 + rng() % (z.size() - 1)];
      const auto pool = annihilator(r, ElementSet{t}).elements.ids();
      const Polynomial f(testing_support::sample(rng, pool, 1 + n % 5));
      if (f.is_zero()) continue;
      const auto fast = find_annihilating_content(r, f, nullptr, &searcher, jobs);
      const auto slow = oracle::first_content(r, f.coefficients());
      if (fast.has_value() != slow.has_value() || (fast && fast->c != *slow)) ++bad;
      if (fast) {
        const auto& g = fast->g.coefficients();
        std::vector<Element> scaled;
        for (Element b : g) scaled.push_back(r.mul(fast->c, b));
        while (!scaled.empty() && scaled.back() == 0) scaled.pop_back();
        const bool ok = fast->c != 0 && r.is_zero_divisor(fast->c) && scaled == f.coefficients() &&
                        oracle::regular_set(r, g) &&
                        oracle::annihilator(r, f.coefficients()) == oracle::annihilator(r, {fast->c});
        invalid += !ok;
      }
      found.push_back(fast ? Json(fast->c) : Json());
      ++n;
    }
    total += n;
    o.evidence.push_back({{"ring", name}, {"contents", std::move(found)}});
  }
  o.summary = std::to_string(total) + " zero-divisor polynomials";
  o.require(bad == 0, std::to_string(bad) + " disagreements in " + std::to_string(total));
  o.require(invalid == 0, std::to_string(invalid) + " witnesses failed re-validation");
  return o;
}

Outcome c7(unsigned jobs) {
  Outcome o;
  const auto& e1 = preset("e1");
  const FiniteRing& r = e1.ring;
  SearchBounds d1 = with_jobs(jobs);
  d1.max_degree = 1;
  auto a = is_armendariz(r, d1);
  o.keep(a);
  o.require(a.verdict == Verdict::False, "Armendariz at d=1 is not false");
  if (a.verdict == Verdict::False) {
    const Polynomial f(a.witness["f"]["coefficients"].get<std::vector<Element>>());
    const Polynomial g(a.witness["g"]["coefficients"].get<std::vector<Element>>());
    const auto ij = a.witness["nonzero_product"];
    o.require(oracle::is_zero(oracle::mul(r, f.coefficients(), g.coefficients())), "fg != 0");
    o.require(r.mul(f[ij[0].get<std::size_t>()], g[ij[1].get<std::size_t>()]) != 0,
              "reported coefficient product is zero");
  }
  SearchBounds d3 = with_jobs(jobs);
  d3.max_degree = 3;
  auto graded = is_armendariz_g_graded(*e1.grading, d3);
  o.keep(graded);
  o.require(holds(graded.verdict), "graded Armendariz at d=3 is false");
  return o;
}

Outcome c8(unsigned jobs) {
  Outcome o;
  SuiteOptions options;
  options.bounds = with_jobs(jobs);
  const auto result = theorem_suite(default_corpus(), options);
  for (const auto& r : result.reports) {
    o.keep(r);
    if (r.verdict == Verdict::False) o.problems.push_back(r.property);
  }
  o.summary = std::to_string(result.reports.size()) + " checks";
  o.require(result.failures == 0, std::to_string(result.failures) + " violations");
  return o;
}

// The same checks through the command line front end.
Json cli_outputs(unsigned jobs) {
  Json out = Json::array();
  const std::vector<std::vector<std::string>> commands{
      {"check", "--ring", "preset:e1", "--property", "em"},
      {"check", "--ring", "preset:e1", "--property", "em-graded"},
      {"--max-degree", "1", "check", "--ring", "preset:e1", "--property", "armendariz"},
      {"check", "--ring", "preset:e1", "--property", "armendariz-graded"},
      {"check", "--ring", "preset:e2-trunc-d2", "--property", "em-graded"},
      {"find-content", "--ring", "preset:e1", "--poly", "2+Y*x"},
      {"suite"}};
  for (auto args : commands) {
    args.insert(args.begin(), {"--format", "json", "--no-timing", "--jobs", std::to_string(jobs)});
    std::ostringstream s, e;
    const int code = cli::run(args, s, e);
    out.push_back({{"code", code}, {"output", s.str()}});
  }
  return out;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const std::vector<std::pair<std::string, std::function<Outcome(unsigned)>>> criteria{
      {"C1 e1 is graded EM but not EM", c1},
      {"C2 R is EM iff R(+)R is graded EM", c2},
      {"C3 Z4[x]/(x^n) is graded EM for n = 2, 3", c3},
      {"C4 truncated Z6[x,y]/(xy) is graded EM", c4},
      {"C5 zero-divisor test matches annihilator search", c5},
      {"C6 content search matches unrestricted search", c6},
      {"C7 e1 is not Armendariz but is graded Armendariz", c7},
      {"C8 theorem suite reports no violations", c8}};

  bool all = true;
  std::vector<std::string> serial;
  for (const auto& [title, run] : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = run(1);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("[%s] %s (%s%.1f s)\n", o.pass ? "PASS" : "FAIL", title.c_str(),
                o.summary.empty() ? "" : (o.summary + ", ").c_str(), secs);
    for (const auto& p : o.problems) std::printf("       %s\n", p.c_str());
    std::fflush(stdout);
    all &= o.pass;
    serial.push_back(o.evidence.dump());
  }

  const auto start = Clock::now();
  Outcome det;
  try {
    for (std::size_t i = 0; i < criteria.size(); ++i) {
      const std::string parallel = criteria[i].second(8).evidence.dump();
      det.require(parallel == serial[i], criteria[i].first.substr(0, 2) + " differs at 8 jobs");
    }
    det.require(cli_outputs(1).dump() == cli_outputs(8).dump(), "command line output differs at 8 jobs");
  } catch (const std::exception& e) {
    det.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("[%s] C9 reports are identical at 1 and 8 jobs (%.1f s)\n", det.pass ? "PASS" : "FAIL", secs);
  for (const auto& p : det.problems) std::printf("       %s\n", p.c_str());
  all &= det.pass;
  return all ? 0 : 1;
}
