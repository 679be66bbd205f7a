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

#include <string>
#include <vector>

#include "emgraded/interchange.hpp"

namespace emg {

struct Preset {
  std::string name;
  Json spec;
  std::string description;
  /// Order cap needed to materialize the preset.
  std::size_t max_order = 4096;
};

/// The shipped presets in listing order.
const std::vector<Preset>& presets();

/// Throws SpecError for an unknown name.
const Preset& find_preset(const std::string& name);

/// Builds the preset with its canonical grading. A caller-supplied cap
/// overrides the preset's own.
GradedRing build_preset(const Preset& preset, std::optional<std::size_t> max_order = std::nullopt);

}  // namespace emg
