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

#include "emgraded/report.hpp"

#include "emgraded/error.hpp"

namespace emg {

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::True:
      return "true";
    case Verdict::False:
      return "false";
    case Verdict::TrueUpToBounds:
      return "true_up_to_bounds";
  }
  return "false";
}

Verdict verdict_from_string(const std::string& text) {
  if (text == "true") return Verdict::True;
  if (text == "false") return Verdict::False;
  if (text == "true_up_to_bounds") return Verdict::TrueUpToBounds;
  throw SpecError("unknown verdict '" + text + "'");
}

Json to_json(const PropertyReport& report, bool include_timing) {
  Json j;
  j["property"] = report.property;
  j["verdict"] = to_string(report.verdict);
  j["witness"] = report.witness;
  Json bounds = Json::object();
  for (const auto& [k, v] : report.bounds) bounds[k] = v;
  j["bounds"] = std::move(bounds);
  j["notes"] = report.notes;
  if (include_timing) j["millis"] = report.millis;
  return j;
}

PropertyReport report_from_json(const Json& j) {
  try {
    PropertyReport r;
    r.property = j.at("property").get<std::string>();
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.witness = j.value("witness", Json());
    const Json bounds = j.value("bounds", Json::object());
    for (const auto& [k, v] : bounds.items())
      r.bounds[k] = v.get<std::int64_t>();
    r.notes = j.value("notes", std::vector<std::string>{});
    r.millis = j.value("millis", 0.0);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace emg
