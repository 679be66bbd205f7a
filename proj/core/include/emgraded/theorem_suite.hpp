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

#include "emgraded/deciders.hpp"
#include "emgraded/grading.hpp"

namespace emg {

struct CorpusEntry {
  std::string name;
  Grading grading;
};

/// Every shipped preset with its canonical grading, in listing order.
/// `names` restricts the corpus; unknown names throw SpecError.
std::vector<CorpusEntry> default_corpus(const std::vector<std::string>& names = {},
                                        std::optional<std::size_t> max_order = std::nullopt);

struct SuiteOptions {
  SearchBounds bounds;
  std::size_t bezout_generators = 2;
  /// Per-check order limits; larger corpus rings skip the check.
  std::size_t bezout_max_order = 1024;
  std::size_t dual_number_max_order = 36;
  std::size_t idealization_max_order = 16;
  std::size_t product_max_order = 256;
  std::size_t transport_max_order = 36;
  std::size_t localization_powers_max_order = 256;
  /// Rings above this order run graded Armendariz at degree 2.
  std::size_t armendariz_max_order = 256;
};

/// One report per (check, subject). A report's verdict is false exactly when
/// the check's hypothesis holds exhaustively and its conclusion fails; the
/// witness records the outcome (consistent, vacuous, inconclusive,
/// violation) and both sides' verdicts.
struct SuiteResult {
  std::vector<PropertyReport> reports;
  std::size_t failures = 0;
};

SuiteResult theorem_suite(const std::vector<CorpusEntry>& corpus, const SuiteOptions& options);

}  // namespace emg
