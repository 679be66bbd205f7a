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
#include <limits>

namespace emg {

/// Index of a ring element in its ring's canonical enumeration. Index 0 is
/// always the zero element.
using Element = std::uint32_t;

inline constexpr Element kNoElement = std::numeric_limits<Element>::max();

/// Storage type of operation table entries; bounds ring orders to 65535.
using TableEntry = std::uint16_t;

inline constexpr std::size_t kMaxTableOrder = std::numeric_limits<TableEntry>::max();

}  // namespace emg
