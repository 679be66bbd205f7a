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

#include "emgraded/content.hpp"

#include <algorithm>
#include <limits>
#include <mutex>

#include "emgraded/error.hpp"
#include "emgraded/parallel.hpp"

namespace emg {

namespace {
constexpr TableEntry kNoPreimage = std::numeric_limits<TableEntry>::max();
}  // namespace

struct ContentSearcher::Candidate {
  std::once_flag preimage_once;
  std::once_flag kill_once;
  std::vector<TableEntry> preimage;  // smallest b with c*b = a, per a
  std::vector<Element> ann;          // Ann(c)
  std::vector<Element> kill;         // Ann(Ann(c)) \ {0}
};

ContentSearcher::ContentSearcher(FiniteRing ring)
    : ring_(std::move(ring)), cache_(new Candidate[ring_.order()]) {
  for (Element c : zero_divisors(ring_))
    if (c != 0) candidates_.push_back(c);
}

ContentSearcher::~ContentSearcher() = default;

const ContentSearcher::Candidate& ContentSearcher::data(Element c) const {
  Candidate& d = cache_[c];
  std::call_once(d.preimage_once, [&] {
    const std::size_t n = ring_.order();
    d.preimage.assign(n, kNoPreimage);
    auto row = ring_.mul_row(c);
    for (Element b = 0; b < n; ++b) {
      if (d.preimage[row[b]] == kNoPreimage) d.preimage[row[b]] = static_cast<TableEntry>(b);
      if (row[b] == 0) d.ann.push_back(b);
    }
  });
  return d;
}

const std::vector<Element>& ContentSearcher::annihilator_of(Element c) const { return data(c).ann; }

bool ContentSearcher::accepts(Element c, std::span<const Element> coefficients) const {
  const Candidate& d = data(c);
  Element pre[64];
  std::vector<Element> spill;
  Element* b = pre;
  if (coefficients.size() > 64) {
    spill.resize(coefficients.size());
    b = spill.data();
  }
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const TableEntry p = d.preimage[coefficients[i]];
    if (p == kNoPreimage) return false;
    b[i] = p;
  }
  Candidate& m = cache_[c];
  std::call_once(m.kill_once, [&] {
    for (Element t = 1; t < ring_.order(); ++t) {
      auto row = ring_.mul_row(t);
      if (std::all_of(m.ann.begin(), m.ann.end(), [&](Element w) { return row[w] == 0; }))
        m.kill.push_back(t);
    }
  });
  for (Element t : m.kill) {
    auto row = ring_.mul_row(t);
    bool kills_all = true;
    for (std::size_t i = 0; i < coefficients.size() && kills_all; ++i) kills_all = row[b[i]] == 0;
    if (kills_all) return false;
  }
  return true;
}

std::optional<Element> ContentSearcher::first_content(std::span<const Element> coefficients,
                                                      const std::vector<Element>* pool,
                                                      unsigned jobs) const {
  const std::vector<Element>& cs = pool ? *pool : candidates_;
  auto hit = parallel_find_first(cs.size(), jobs,
                                 [&](std::size_t i) { return accepts(cs[i], coefficients); });
  if (!hit) return std::nullopt;
  return cs[*hit];
}

Polynomial ContentSearcher::cofactor(Element c, const Polynomial& f) const {
  const Candidate& d = data(c);
  std::vector<Element> g;
  for (Element a : f.coefficients()) {
    if (d.preimage[a] == kNoPreimage)
      throw PreconditionError(ring_.label(a) + " is not a multiple of " + ring_.label(c));
    g.push_back(d.preimage[a]);
  }
  for (Element w : d.ann)
    if (w != 0) g.push_back(w);
  return Polynomial(std::move(g));
}

bool witness_is_valid(const FiniteRing& ring, const Polynomial& f, const ContentWitness& w) {
  if (w.c == 0 || w.c >= ring.order() || !ring.is_zero_divisor(w.c)) return false;
  if (!(poly_scale(ring, w.c, w.g) == f)) return false;
  if (!has_trivial_annihilator(ring, w.g.coefficient_set().ids())) return false;
  const ElementSet cf = f.coefficient_set();
  return annihilator(ring, cf).elements == annihilator(ring, ElementSet{w.c}).elements;
}

std::optional<ContentWitness> find_annihilating_content(const FiniteRing& ring,
                                                        const Polynomial& f,
                                                        const Grading* grading,
                                                        const ContentSearcher* searcher,
                                                        unsigned jobs) {
  check_polynomial(ring, f);
  if (!is_zero_divisor_poly(ring, f))
    throw PreconditionError("content search needs a zero-divisor polynomial; " +
                            format_polynomial(ring, f) + " is regular");
  std::unique_ptr<ContentSearcher> local;
  if (!searcher) {
    local = std::make_unique<ContentSearcher>(ring);
    searcher = local.get();
  }
  const ElementSet coeffs = f.coefficient_set();
  const auto c = searcher->first_content(coeffs.ids(), nullptr, jobs);
  if (!c) return std::nullopt;

  ContentWitness w{*c, searcher->cofactor(*c, f), std::nullopt};
  if (grading) {
    std::vector<Element> pool;
    for (Element h : homogeneous_zero_divisors(*grading))
      if (h != 0) pool.push_back(h);
    w.homogeneous_c = searcher->first_content(coeffs.ids(), &pool, jobs);
  }
  if (!witness_is_valid(ring, f, w))
    throw InternalError("content witness for " + format_polynomial(ring, f) +
                        " failed re-validation");
  if (w.homogeneous_c) {
    ContentWitness h{*w.homogeneous_c, searcher->cofactor(*w.homogeneous_c, f), std::nullopt};
    if (!witness_is_valid(ring, f, h))
      throw InternalError("homogeneous content witness failed re-validation");
  }
  return w;
}

}  // namespace emg
