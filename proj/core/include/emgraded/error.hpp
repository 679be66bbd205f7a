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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "emgraded/types.hpp"

namespace emg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A candidate table set violates a ring axiom. `witness` holds the
/// offending element triple (or pair / single element) when one exists.
class InvalidRing : public Error {
 public:
  InvalidRing(std::string axiom, std::vector<Element> witness);

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::vector<Element> witness_;
};

/// A candidate grading violates one of the grading clauses
/// (not-a-subgroup, not-direct-sum, multiplicativity, identity, degree).
class InvalidGrading : public Error {
 public:
  InvalidGrading(std::string clause, std::string detail,
                 std::vector<Element> witness = {});

  const std::string& clause() const noexcept { return clause_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  std::string clause_;
  std::vector<Element> witness_;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed the configured order cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed input document, unknown preset, bad literal.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always a library bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace emg
