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

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emgraded/types.hpp"

namespace emg {

/// Raw operation tables of a candidate ring. Tables are row-major
/// `order x order`; entry `add[a * order + b]` is the index of a + b.
struct RingTables {
  std::size_t order = 0;
  std::vector<TableEntry> add;
  std::vector<TableEntry> mul;
  Element zero = 0;
  Element one = 0;
  std::vector<std::string> labels;
};

/// A sorted, duplicate-free set of element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<Element> ids);
  ElementSet(std::initializer_list<Element> ids);

  bool contains(Element a) const noexcept;
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  Element operator[](std::size_t i) const noexcept { return ids_[i]; }
  const std::vector<Element>& ids() const noexcept { return ids_; }

  bool is_subset_of(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<Element> ids_;
};

/// An ideal together with the generators it was built from.
struct Ideal {
  ElementSet elements;
  std::vector<Element> generators;

  bool contains(Element a) const noexcept { return elements.contains(a); }
  std::size_t size() const noexcept { return elements.size(); }
};

/// A finite commutative ring with identity, given by operation tables.
///
/// Instances only come out of `validate` (or the trusted constructors in
/// constructions.hpp, which are checked by the same routine), so every
/// FiniteRing satisfies the ring axioms. Copies share the immutable tables.
class FiniteRing {
 public:
  /// Checks every axiom and returns the ring, or throws InvalidRing naming
  /// the first violated axiom together with a witnessing triple.
  ///
  /// Orders up to 256 are checked by direct triple scans. Larger orders use
  /// generator-based checks (Light's associativity test over an additive
  /// generating set, distributivity against generators) which decide the
  /// same axioms in O(N^2 * gens).
  static FiniteRing validate(RingTables tables);

  /// An empty placeholder of order 0, only useful as an assignment target.
  FiniteRing() = default;

  std::size_t order() const noexcept { return n_; }
  Element zero() const noexcept { return 0; }
  Element one() const noexcept;

  Element add(Element a, Element b) const noexcept { return add_[a * n_ + b]; }
  Element mul(Element a, Element b) const noexcept { return mul_[a * n_ + b]; }
  Element neg(Element a) const noexcept;
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

  bool is_zero_divisor(Element a) const noexcept;
  bool is_unit(Element a) const noexcept { return !is_zero_divisor(a); }
  /// Multiplicative inverse of a unit; kNoElement otherwise.
  Element inverse(Element a) const noexcept;

  std::span<const TableEntry> mul_row(Element a) const noexcept {
    return {mul_ + a * n_, n_};
  }
  std::span<const TableEntry> add_row(Element a) const noexcept {
    return {add_ + a * n_, n_};
  }

  /// A generating set of the additive group in canonical order: every
  /// element is a finite sum of generators.
  const std::vector<Element>& additive_generators() const noexcept;

  bool has_labels() const noexcept;
  /// Display string of an element; the decimal index when unlabeled.
  std::string label(Element a) const;
  const std::vector<std::string>& labels() const noexcept;

  /// Free-form provenance notes carried into reports, such as
  /// "truncated at degree 2".
  const std::vector<std::string>& tags() const noexcept { return tags_; }
  FiniteRing with_tags(std::vector<std::string> tags) const;
  FiniteRing with_labels(std::vector<std::string> labels) const;

  const RingTables& tables() const noexcept;

  /// Table equality (labels and tags ignored).
  bool same_tables(const FiniteRing& other) const noexcept;

 private:
  struct Data;
  explicit FiniteRing(std::shared_ptr<const Data> data);

  std::shared_ptr<const Data> data_;
  const TableEntry* add_ = nullptr;
  const TableEntry* mul_ = nullptr;
  std::size_t n_ = 0;
  std::vector<std::string> tags_;
};

ElementSet all_elements(const FiniteRing& ring);

/// Z(R): elements r with r*s = 0 for some s != 0. Contains 0 when order > 1.
ElementSet zero_divisors(const FiniteRing& ring);
ElementSet units(const FiniteRing& ring);
ElementSet idempotents(const FiniteRing& ring);
/// Complement of zero_divisors; equals units in a finite ring.
ElementSet regular_elements(const FiniteRing& ring);

/// Ann(S) = { t : t*s = 0 for all s in S }. The empty set annihilates the
/// whole ring.
Ideal annihilator(const FiniteRing& ring, std::span<const Element> set);
inline Ideal annihilator(const FiniteRing& ring, const ElementSet& set) {
  return annihilator(ring, std::span<const Element>(set.ids()));
}

/// True when only 0 annihilates every element of `set`.
bool has_trivial_annihilator(const FiniteRing& ring, std::span<const Element> set);

/// Smallest nonzero t annihilating every element of `set`, if any.
std::optional<Element> smallest_annihilating_element(const FiniteRing& ring,
                                                     std::span<const Element> set);

/// { b : c*b = a }. Empty or a coset of Ann(c).
ElementSet divisor_solutions(const FiniteRing& ring, Element c, Element a);

/// a*R.
Ideal principal_ideal(const FiniteRing& ring, Element a);

/// Closure of `gens` under addition and multiplication by ring elements.
Ideal ideal_generated(const FiniteRing& ring, std::span<const Element> gens);
inline Ideal ideal_generated(const FiniteRing& ring, const ElementSet& gens) {
  return ideal_generated(ring, std::span<const Element>(gens.ids()));
}

/// Smallest p with <p> = I, if the ideal is principal.
std::optional<Element> is_principal(const FiniteRing& ring, const Ideal& ideal);

/// A subring materialized as its own FiniteRing. `embedding[i]` is the
/// ambient index of the subring's element i.
struct Subring {
  FiniteRing ring;
  std::vector<Element> embedding;
};

/// Restricts the tables to `elements`. Throws PreconditionError when the set
/// is not closed under the ring operations or misses 0 or 1.
Subring subring(const FiniteRing& ring, const ElementSet& elements);

/// A ring isomorphism from `from` to `to` given as an index map, if any.
std::optional<std::vector<Element>> find_isomorphism(const FiniteRing& from,
                                                     const FiniteRing& to);

/// Up to `limit` automorphisms of the ring, identity first.
std::vector<std::vector<Element>> automorphisms(const FiniteRing& ring,
                                                std::size_t limit);

}  // namespace emg
