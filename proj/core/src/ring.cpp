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

#include "emgraded/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "emgraded/error.hpp"

namespace emg {

InvalidRing::InvalidRing(std::string axiom, std::vector<Element> witness)
    : Error([&] {
        std::ostringstream os;
        os << "ring axiom violated: " << axiom;
        if (!witness.empty()) {
          os << " at (";
          for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
          os << ")";
        }
        return os.str();
      }()),
      axiom_(std::move(axiom)),
      witness_(std::move(witness)) {}

InvalidGrading::InvalidGrading(std::string clause, std::string detail,
                               std::vector<Element> witness)
    : Error("invalid grading (" + clause + "): " + detail),
      clause_(std::move(clause)),
      witness_(std::move(witness)) {}

// ---------------------------------------------------------------------------
// ElementSet

ElementSet::ElementSet(std::vector<Element> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

ElementSet::ElementSet(std::initializer_list<Element> ids)
    : ElementSet(std::vector<Element>(ids)) {}

bool ElementSet::contains(Element a) const noexcept {
  return std::binary_search(ids_.begin(), ids_.end(), a);
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  std::vector<Element> out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out));
  return ElementSet(std::move(out));
}

// ---------------------------------------------------------------------------
// FiniteRing

struct FiniteRing::Data {
  RingTables tables;
  std::vector<TableEntry> neg;
  std::vector<std::uint8_t> zero_divisor;
  std::vector<Element> inverse;
  std::vector<Element> additive_generators;
};

namespace {

constexpr std::size_t kDirectCheckLimit = 256;

// Greedy generating set of the additive group: the closure of {0} under
// "add a generator" reaches every element.
std::vector<Element> compute_additive_generators(const RingTables& t) {
  const std::size_t n = t.order;
  std::vector<std::uint8_t> covered(n, 0);
  std::vector<Element> members{0};
  covered[0] = 1;
  std::vector<Element> gens;
  for (Element x = 0; x < n; ++x) {
    if (covered[x]) continue;
    gens.push_back(x);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Element g : gens) {
        Element s = t.add[members[i] * n + g];
        if (!covered[s]) {
          covered[s] = 1;
          members.push_back(s);
        }
      }
    }
  }
  return gens;
}

void check_shape(const RingTables& t) {
  const std::size_t n = t.order;
  if (n == 0) throw InvalidRing("shape: order must be positive", {});
  if (n > kMaxTableOrder) throw InvalidRing("shape: order exceeds 65535", {});
  if (t.add.size() != n * n || t.mul.size() != n * n)
    throw InvalidRing("shape: tables must be order x order", {});
  for (std::size_t i = 0; i < n * n; ++i) {
    if (t.add[i] >= n || t.mul[i] >= n) {
      throw InvalidRing("shape: table entry out of range",
                        {static_cast<Element>(i / n), static_cast<Element>(i % n)});
    }
  }
  if (t.zero != 0) throw InvalidRing("zero-index: the zero element must have index 0", {t.zero});
  if (t.one >= n) throw InvalidRing("shape: one out of range", {t.one});
  if (!t.labels.empty() && t.labels.size() != n)
    throw InvalidRing("shape: label count must equal order", {});
}

void check_axioms(const RingTables& t, const std::vector<Element>& gens) {
  const std::size_t n = t.order;
  auto add = [&](Element a, Element b) -> Element { return t.add[a * n + b]; };
  auto mul = [&](Element a, Element b) -> Element { return t.mul[a * n + b]; };
  const Element one = t.one;

  for (Element a = 0; a < n; ++a)
    if (add(0, a) != a || add(a, 0) != a) throw InvalidRing("additive-identity", {a});
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (add(a, b) != add(b, a)) throw InvalidRing("additive-commutativity", {a, b});
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b) found = add(a, b) == 0;
    if (!found) throw InvalidRing("additive-inverse", {a});
  }
  const bool direct = n <= kDirectCheckLimit;
  if (direct) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (add(add(a, b), c) != add(a, add(b, c)))
            throw InvalidRing("additive-associativity", {a, b, c});
  } else {
    // Light's test: the elements g with (x+g)+y = x+(g+y) for all x, y form
    // a closed set, so checking a generating set suffices.
    for (Element g : gens)
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          if (add(add(x, g), y) != add(x, add(g, y)))
            throw InvalidRing("additive-associativity", {x, g, y});
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) throw InvalidRing("multiplicative-commutativity", {a, b});
  for (Element a = 0; a < n; ++a)
    if (mul(one, a) != a) throw InvalidRing("multiplicative-identity", {one, a});
  for (Element a = 0; a < n; ++a)
    if (mul(0, a) != 0) throw InvalidRing("zero-absorption", {0, a});
  if (direct) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
            throw InvalidRing("distributivity", {a, b, c});
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw InvalidRing("multiplicative-associativity", {a, b, c});
  } else {
    // b -> a*b is additive once it respects every generator.
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element g : gens)
          if (mul(a, add(b, g)) != add(mul(a, b), mul(a, g)))
            throw InvalidRing("distributivity", {a, b, g});
    // Multiplication is now bilinear, so associativity on generators
    // extends to all sums of generators.
    for (Element g : gens)
      for (Element h : gens)
        for (Element k : gens)
          if (mul(mul(g, h), k) != mul(g, mul(h, k)))
            throw InvalidRing("multiplicative-associativity", {g, h, k});
  }
}

}  // namespace

FiniteRing::FiniteRing(std::shared_ptr<const Data> data)
    : data_(std::move(data)),
      add_(data_->tables.add.data()),
      mul_(data_->tables.mul.data()),
      n_(data_->tables.order) {}

FiniteRing FiniteRing::validate(RingTables tables) {
  check_shape(tables);
  auto gens = compute_additive_generators(tables);
  check_axioms(tables, gens);

  auto data = std::make_shared<Data>();
  const std::size_t n = tables.order;
  data->neg.assign(n, 0);
  data->zero_divisor.assign(n, 0);
  data->inverse.assign(n, kNoElement);
  for (Element a = 0; a < n; ++a) {
    const TableEntry* arow = &tables.add[a * n];
    for (Element b = 0; b < n; ++b)
      if (arow[b] == 0) {
        data->neg[a] = static_cast<TableEntry>(b);
        break;
      }
    const TableEntry* mrow = &tables.mul[a * n];
    for (Element s = 1; s < n; ++s)
      if (mrow[s] == 0) {
        data->zero_divisor[a] = 1;
        break;
      }
    if (!data->zero_divisor[a]) {
      for (Element b = 0; b < n; ++b)
        if (mrow[b] == tables.one) {
          data->inverse[a] = b;
          break;
        }
      // In a finite commutative ring every regular element is a unit.
      if (data->inverse[a] == kNoElement)
        throw InternalError("regular element without inverse: " + std::to_string(a));
    }
  }
  data->additive_generators = std::move(gens);
  data->tables = std::move(tables);
  return FiniteRing(std::move(data));
}

Element FiniteRing::one() const noexcept { return data_->tables.one; }
Element FiniteRing::neg(Element a) const noexcept { return data_->neg[a]; }
bool FiniteRing::is_zero_divisor(Element a) const noexcept {
  return data_->zero_divisor[a] != 0;
}
Element FiniteRing::inverse(Element a) const noexcept { return data_->inverse[a]; }

const std::vector<Element>& FiniteRing::additive_generators() const noexcept {
  return data_->additive_generators;
}

bool FiniteRing::has_labels() const noexcept { return !data_->tables.labels.empty(); }

std::string FiniteRing::label(Element a) const {
  if (has_labels()) return data_->tables.labels[a];
  return std::to_string(a);
}

const std::vector<std::string>& FiniteRing::labels() const noexcept {
  return data_->tables.labels;
}

FiniteRing FiniteRing::with_tags(std::vector<std::string> tags) const {
  FiniteRing copy = *this;
  copy.tags_ = std::move(tags);
  return copy;
}

FiniteRing FiniteRing::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != n_)
    throw PreconditionError("label count must equal ring order");
  auto data = std::make_shared<Data>(*data_);
  data->tables.labels = std::move(labels);
  FiniteRing out(std::move(data));
  out.tags_ = tags_;
  return out;
}

const RingTables& FiniteRing::tables() const noexcept { return data_->tables; }

bool FiniteRing::same_tables(const FiniteRing& other) const noexcept {
  if (data_ == other.data_) return true;
  const auto& a = data_->tables;
  const auto& b = other.data_->tables;
  return a.order == b.order && a.one == b.one && a.add == b.add && a.mul == b.mul;
}

// ---------------------------------------------------------------------------
// Element-level algebra

ElementSet all_elements(const FiniteRing& ring) {
  std::vector<Element> ids(ring.order());
  std::iota(ids.begin(), ids.end(), Element{0});
  return ElementSet(std::move(ids));
}

ElementSet zero_divisors(const FiniteRing& ring) {
  std::vector<Element> out;
  for (Element a = 0; a < ring.order(); ++a)
    if (ring.is_zero_divisor(a)) out.push_back(a);
  return ElementSet(std::move(out));
}

ElementSet units(const FiniteRing& ring) {
  std::vector<Element> out;
  for (Element a = 0; a < ring.order(); ++a)
    if (ring.inverse(a) != kNoElement) out.push_back(a);
  return ElementSet(std::move(out));
}

ElementSet idempotents(const FiniteRing& ring) {
  std::vector<Element> out;
  for (Element a = 0; a < ring.order(); ++a)
    if (ring.mul(a, a) == a) out.push_back(a);
  return ElementSet(std::move(out));
}

ElementSet regular_elements(const FiniteRing& ring) {
  std::vector<Element> out;
  for (Element a = 0; a < ring.order(); ++a)
    if (!ring.is_zero_divisor(a)) out.push_back(a);
  return ElementSet(std::move(out));
}

Ideal annihilator(const FiniteRing& ring, std::span<const Element> set) {
  std::vector<Element> out;
  for (Element t = 0; t < ring.order(); ++t) {
    bool kills = std::all_of(set.begin(), set.end(),
                             [&](Element s) { return ring.mul(t, s) == 0; });
    if (kills) out.push_back(t);
  }
  return Ideal{ElementSet(std::move(out)), std::vector<Element>(set.begin(), set.end())};
}

std::optional<Element> smallest_annihilating_element(const FiniteRing& ring,
                                                     std::span<const Element> set) {
  for (Element t = 1; t < ring.order(); ++t) {
    bool kills = std::all_of(set.begin(), set.end(),
                             [&](Element s) { return ring.mul(t, s) == 0; });
    if (kills) return t;
  }
  return std::nullopt;
}

bool has_trivial_annihilator(const FiniteRing& ring, std::span<const Element> set) {
  return !smallest_annihilating_element(ring, set).has_value();
}

ElementSet divisor_solutions(const FiniteRing& ring, Element c, Element a) {
  std::vector<Element> out;
  auto row = ring.mul_row(c);
  for (Element b = 0; b < ring.order(); ++b)
    if (row[b] == a) out.push_back(b);
  return ElementSet(std::move(out));
}

Ideal principal_ideal(const FiniteRing& ring, Element a) {
  std::vector<std::uint8_t> seen(ring.order(), 0);
  for (TableEntry v : ring.mul_row(a)) seen[v] = 1;
  std::vector<Element> out;
  for (Element x = 0; x < ring.order(); ++x)
    if (seen[x]) out.push_back(x);
  return Ideal{ElementSet(std::move(out)), {a}};
}

Ideal ideal_generated(const FiniteRing& ring, std::span<const Element> gens) {
  const std::size_t n = ring.order();
  std::vector<std::uint8_t> in(n, 0);
  std::vector<Element> members{0};
  in[0] = 1;
  for (Element g : gens) {
    if (in[g]) continue;
    // members := members + g*R; both are ideals so the sum set is the ideal sum.
    const auto multiples = principal_ideal(ring, g).elements;
    const std::vector<Element> current = members;
    for (Element x : current)
      for (Element p : multiples) {
        Element s = ring.add(x, p);
        if (!in[s]) {
          in[s] = 1;
          members.push_back(s);
        }
      }
  }
  return Ideal{ElementSet(std::move(members)), std::vector<Element>(gens.begin(), gens.end())};
}

std::optional<Element> is_principal(const FiniteRing& ring, const Ideal& ideal) {
  for (Element p : ideal.elements) {
    if (principal_ideal(ring, p).size() == ideal.size()) return p;
  }
  return std::nullopt;
}

Subring subring(const FiniteRing& ring, const ElementSet& elements) {
  if (!elements.contains(0) || !elements.contains(ring.one()))
    throw PreconditionError("subring must contain 0 and 1");
  const std::size_t m = elements.size();
  std::vector<Element> position(ring.order(), kNoElement);
  for (std::size_t i = 0; i < m; ++i) position[elements[i]] = static_cast<Element>(i);
  RingTables t;
  t.order = m;
  t.add.resize(m * m);
  t.mul.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Element s = position[ring.add(elements[i], elements[j])];
      Element p = position[ring.mul(elements[i], elements[j])];
      if (s == kNoElement || p == kNoElement)
        throw PreconditionError("element set is not closed under the ring operations");
      t.add[i * m + j] = static_cast<TableEntry>(s);
      t.mul[i * m + j] = static_cast<TableEntry>(p);
    }
  t.zero = 0;
  t.one = position[ring.one()];
  if (ring.has_labels())
    for (Element e : elements) t.labels.push_back(ring.label(e));
  return Subring{FiniteRing::validate(std::move(t)).with_tags(ring.tags()), elements.ids()};
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

std::size_t additive_order(const FiniteRing& r, Element x) {
  Element acc = x;
  std::size_t k = 1;
  while (acc != 0) {
    acc = r.add(acc, x);
    ++k;
  }
  return k;
}

// Spanning tree of the additive group over the generators, grouped in
// phases: elements of phase i are reachable using generators 0..i only.
struct AdditiveTree {
  std::vector<Element> order;        // insertion order, starts with 0
  std::vector<Element> parent;       // element = parent + generator
  std::vector<std::size_t> gen_of;   // index into generators
  std::vector<std::size_t> phase_end;  // order[0, phase_end[i]) spans gens 0..i
};

AdditiveTree build_tree(const FiniteRing& r, const std::vector<Element>& gens) {
  AdditiveTree t;
  const std::size_t n = r.order();
  t.parent.assign(n, kNoElement);
  t.gen_of.assign(n, 0);
  std::vector<std::uint8_t> in(n, 0);
  in[0] = 1;
  t.order.push_back(0);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    for (std::size_t i = 0; i < t.order.size(); ++i) {
      for (std::size_t gj = 0; gj <= gi; ++gj) {
        Element s = r.add(t.order[i], gens[gj]);
        if (!in[s]) {
          in[s] = 1;
          t.parent[s] = t.order[i];
          t.gen_of[s] = gj;
          t.order.push_back(s);
        }
      }
    }
    t.phase_end.push_back(t.order.size());
  }
  return t;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteRing& from, const FiniteRing& to, std::size_t limit)
      : a_(from), b_(to), limit_(limit), gens_(from.additive_generators()),
        tree_(build_tree(from, gens_)) {
    for (Element g : gens_) {
      std::size_t k = additive_order(a_, g);
      std::vector<Element> cands;
      for (Element y = 1; y < b_.order(); ++y)
        if (additive_order(b_, y) == k) cands.push_back(y);
      candidates_.push_back(std::move(cands));
    }
    phi_.assign(a_.order(), kNoElement);
    used_.assign(b_.order(), 0);
  }

  std::vector<std::vector<Element>> run() {
    if (a_.order() != b_.order()) return {};
    if (gens_.empty()) {  // zero ring
      results_.push_back({0});
      return results_;
    }
    images_.assign(gens_.size(), kNoElement);
    phi_[0] = 0;
    used_[0] = 1;
    search(0);
    return results_;
  }

 private:
  void search(std::size_t gi) {
    if (results_.size() >= limit_) return;
    if (gi == gens_.size()) {
      if (phi_[a_.one()] == b_.one()) results_.push_back(phi_);
      return;
    }
    for (Element y : candidates_[gi]) {
      images_[gi] = y;
      const std::size_t begin = gi == 0 ? 1 : tree_.phase_end[gi - 1];
      const std::size_t end = tree_.phase_end[gi];
      std::size_t assigned = begin;
      bool ok = true;
      for (; assigned < end; ++assigned) {
        Element e = tree_.order[assigned];
        Element img = b_.add(phi_[tree_.parent[e]], images_[tree_.gen_of[e]]);
        if (used_[img]) {
          ok = false;
          break;
        }
        phi_[e] = img;
        used_[img] = 1;
      }
      if (ok) ok = consistent(gi, end);
      if (ok) search(gi + 1);
      for (std::size_t k = begin; k < assigned; ++k) {
        used_[phi_[tree_.order[k]]] = 0;
        phi_[tree_.order[k]] = kNoElement;
      }
      if (results_.size() >= limit_) return;
    }
  }

  // Checks additivity and multiplicativity wherever both sides are already
  // mapped; complete once every generator is assigned.
  bool consistent(std::size_t gi, std::size_t end) const {
    for (std::size_t k = 0; k < end; ++k) {
      Element x = tree_.order[k];
      for (std::size_t gj = 0; gj <= gi; ++gj) {
        Element s = a_.add(x, gens_[gj]);
        if (phi_[s] == kNoElement) continue;
        if (phi_[s] != b_.add(phi_[x], images_[gj])) return false;
      }
    }
    for (std::size_t g1 = 0; g1 <= gi; ++g1)
      for (std::size_t g2 = 0; g2 <= gi; ++g2) {
        Element p = a_.mul(gens_[g1], gens_[g2]);
        if (phi_[p] == kNoElement) continue;
        if (phi_[p] != b_.mul(images_[g1], images_[g2])) return false;
      }
    return true;
  }

  const FiniteRing& a_;
  const FiniteRing& b_;
  std::size_t limit_;
  std::vector<Element> gens_;
  AdditiveTree tree_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> images_;
  std::vector<Element> phi_;
  std::vector<std::uint8_t> used_;
  std::vector<std::vector<Element>> results_;
};

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const FiniteRing& from,
                                                     const FiniteRing& to) {
  if (from.order() != to.order()) return std::nullopt;
  auto found = IsoSearch(from, to, 1).run();
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

std::vector<std::vector<Element>> automorphisms(const FiniteRing& ring, std::size_t limit) {
  std::vector<std::vector<Element>> out;
  if (limit == 0) return out;
  std::vector<Element> identity(ring.order());
  std::iota(identity.begin(), identity.end(), Element{0});
  out.push_back(identity);
  for (auto& phi : IsoSearch(ring, ring, limit + 1).run()) {
    if (out.size() >= limit) break;
    if (phi != identity) out.push_back(std::move(phi));
  }
  return out;
}

}  // namespace emg
