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

// Slow reference implementations used to cross-check the library. They only
// touch the raw operation tables and share no code with the deciders.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "emgraded/ring.hpp"

namespace oracle {

using emg::Element;
using emg::FiniteRing;
using Coeffs = std::vector<Element>;

inline std::vector<Element> zero_divisors(const FiniteRing& r) {
  std::vector<Element> out;
  for (Element a = 0; a < r.order(); ++a)
    for (Element b = 1; b < r.order(); ++b)
      if (r.mul(a, b) == 0) {
        out.push_back(a);
        break;
      }
  return out;
}

inline std::vector<Element> annihilator(const FiniteRing& r, const std::vector<Element>& s) {
  std::vector<Element> out;
  for (Element t = 0; t < r.order(); ++t)
    if (std::all_of(s.begin(), s.end(), [&](Element a) { return r.mul(t, a) == 0; }))
      out.push_back(t);
  return out;
}

// Closure of the generators under addition and multiplication by R.
inline std::vector<Element> ideal(const FiniteRing& r, const std::vector<Element>& gens) {
  std::set<Element> cur{0};
  for (Element g : gens)
    for (Element x = 0; x < r.order(); ++x) cur.insert(r.mul(g, x));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Element> snap(cur.begin(), cur.end());
    for (Element a : snap)
      for (Element b : snap)
        grew |= cur.insert(r.add(a, b)).second;
  }
  return {cur.begin(), cur.end()};
}

inline Coeffs mul(const FiniteRing& r, const Coeffs& f, const Coeffs& g) {
  if (f.empty() || g.empty()) return {};
  Coeffs h(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) h[i + j] = r.add(h[i + j], r.mul(f[i], g[j]));
  return h;
}

inline bool is_zero(const Coeffs& f) {
  return std::all_of(f.begin(), f.end(), [](Element a) { return a == 0; });
}

// Nonzero g with deg g <= d and f g = 0, found by depth first search that
// fixes g_0, g_1, ... and checks product coefficient k once g_0..g_k are set.
inline std::optional<Coeffs> polynomial_annihilator(const FiniteRing& r, const Coeffs& f,
                                                    std::size_t d) {
  const std::size_t n = r.order();
  Coeffs g(d + 1, 0);
  std::function<bool(std::size_t)> dfs = [&](std::size_t k) -> bool {
    if (k == d + 1) {
      if (is_zero(g)) return false;
      return is_zero(mul(r, f, g));
    }
    for (Element v = 0; v < n; ++v) {
      g[k] = v;
      Element coef = 0;
      for (std::size_t j = 0; j <= k; ++j)
        if (k - j < f.size()) coef = r.add(coef, r.mul(f[k - j], g[j]));
      if (coef == 0 && dfs(k + 1)) return true;
    }
    g[k] = 0;
    return false;
  };
  if (dfs(0)) return g;
  return std::nullopt;
}

inline bool regular_set(const FiniteRing& r, const std::vector<Element>& s) {
  for (Element t = 1; t < r.order(); ++t)
    if (std::all_of(s.begin(), s.end(), [&](Element a) { return r.mul(t, a) == 0; }))
      return false;
  return true;
}

// Does some (c, g) with c a nonzero zero divisor, c g = f, deg g <= deg f + |R|
// and g regular exist? Every coefficient of g up to deg f ranges over all
// preimages. Positions above deg f hold elements killed by c; there are
// |R| of them, enough to hold every such element, and adding elements to
// the coefficient set can only shrink its annihilator, so the search puts
// all of them there.
inline bool content_exists_for(const FiniteRing& r, const Coeffs& f, Element c) {
  const std::size_t n = r.order();
  std::vector<std::vector<Element>> pre(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (Element b = 0; b < n; ++b)
      if (r.mul(c, b) == f[i]) pre[i].push_back(b);
    if (pre[i].empty()) return false;
  }
  std::vector<Element> tail;
  for (Element b = 1; b < n; ++b)
    if (r.mul(c, b) == 0) tail.push_back(b);
  std::vector<Element> chosen = tail;
  const std::size_t base = chosen.size();
  chosen.resize(base + f.size());
  std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
    if (i == f.size()) return regular_set(r, chosen);
    for (Element b : pre[i]) {
      chosen[base + i] = b;
      if (dfs(i + 1)) return true;
    }
    return false;
  };
  return dfs(0);
}

inline std::optional<Element> first_content(const FiniteRing& r, const Coeffs& f) {
  for (Element c : oracle::zero_divisors(r))
    if (c != 0 && content_exists_for(r, f, c)) return c;
  return std::nullopt;
}

// Bijection phi with phi(a+b) = phi(a)+phi(b), phi(ab) = phi(a)phi(b) and
// phi(1) = 1, found by plain backtracking over images.
inline std::optional<std::vector<Element>> isomorphism(const FiniteRing& a, const FiniteRing& b) {
  const std::size_t n = a.order();
  if (b.order() != n) return std::nullopt;
  std::vector<Element> phi(n, emg::kNoElement);
  std::vector<bool> used(n, false);
  std::function<bool(Element)> go = [&](Element x) -> bool {
    if (x == n) return true;
    for (Element y = 0; y < n; ++y) {
      if (used[y]) continue;
      if (x == 0 && y != 0) continue;
      if (x == a.one() && y != b.one()) continue;
      phi[x] = y;
      bool ok = true;
      for (Element u = 0; u <= x && ok; ++u) {
        const Element s = a.add(u, x), p = a.mul(u, x);
        if (phi[s] != emg::kNoElement && phi[s] != b.add(phi[u], y)) ok = false;
        if (phi[p] != emg::kNoElement && phi[p] != b.mul(phi[u], y)) ok = false;
        for (Element v = 0; v <= x && ok; ++v) {
          const Element s2 = a.add(u, v), p2 = a.mul(u, v);
          if (s2 <= x && phi[s2] != b.add(phi[u], phi[v])) ok = false;
          if (p2 <= x && phi[p2] != b.mul(phi[u], phi[v])) ok = false;
        }
      }
      if (ok) {
        used[y] = true;
        if (go(x + 1)) return true;
        used[y] = false;
      }
      phi[x] = emg::kNoElement;
    }
    return false;
  };
  if (n > 0 && go(0)) return phi;
  return std::nullopt;
}

// Every nonzero zero-divisor polynomial of degree <= d has a content.
inline bool em_up_to_degree(const FiniteRing& r, std::size_t d) {
  const std::size_t n = r.order();
  Coeffs f(d + 1, 0);
  std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
    if (k == d + 1) {
      if (is_zero(f) || regular_set(r, f)) return true;
      Coeffs trimmed = f;
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      return first_content(r, trimmed).has_value();
    }
    for (Element v = 0; v < n; ++v) {
      f[k] = v;
      if (!go(k + 1)) return false;
    }
    return true;
  };
  return go(0);
}

}  // namespace oracle
