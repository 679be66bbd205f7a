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
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace emg {

using Json = nlohmann::ordered_json;

enum class Verdict { True, False, TrueUpToBounds };

std::string to_string(Verdict verdict);
/// Throws SpecError for anything other than the three serialized spellings.
Verdict verdict_from_string(const std::string& text);

/// True and TrueUpToBounds.
inline bool holds(Verdict v) { return v != Verdict::False; }

/// Outcome of one decider run.
///
/// A False verdict always carries a witness that re-checks; an exhaustive
/// True carries no bounds; TrueUpToBounds lists the caps that limited the
/// search.
struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::True;
  Json witness;  // null when there is nothing to show
  std::map<std::string, std::int64_t> bounds;
  std::vector<std::string> notes;
  double millis = 0.0;

  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

/// `include_timing = false` drops `millis` so that reports from different
/// runs compare byte for byte.
Json to_json(const PropertyReport& report, bool include_timing = true);
PropertyReport report_from_json(const Json& json);

}  // namespace emg
