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

#include <map>
#include <random>
#include <string>

#include "emgraded/constructions.hpp"
#include "emgraded/presets.hpp"

namespace testing_support {

inline const emg::GradedRing& preset(const std::string& name) {
  static std::map<std::string, emg::GradedRing> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, emg::build_preset(emg::find_preset(name))).first;
  return it->second;
}

inline std::vector<std::string> small_presets(std::size_t max_order = 16) {
  std::vector<std::string> out;
  for (const auto& p : emg::presets())
    if (p.name.rfind("e2-trunc", 0) != 0 && preset(p.name).ring.order() <= max_order)
      out.push_back(p.name);
  return out;
}

inline emg::Element element(const emg::FiniteRing& r, const std::string& label) {
  for (emg::Element a = 0; a < r.order(); ++a)
    if (r.label(a) == label) return a;
  throw std::runtime_error("no element labelled " + label);
}

// Random coefficient vector of exact length len over the given pool, with a
// nonzero leading coefficient when the pool has one.
inline std::vector<emg::Element> sample(std::mt19937_64& rng, const std::vector<emg::Element>& pool,
                                        std::size_t len) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<emg::Element> f(len);
  for (auto& a : f) a = pool[pick(rng)];
  if (std::any_of(pool.begin(), pool.end(), [](emg::Element a) { return a != 0; }))
    while (f.back() == 0) f.back() = pool[pick(rng)];
  return f;
}

}  // namespace testing_support
