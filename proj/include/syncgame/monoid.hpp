/*
 * Copyright 2026 The syncgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "syncgame/dfa.hpp"
#include "syncgame/error.hpp"

namespace syncgame {

/// Index of an element in an enumerated Monoid. Index 0 is the identity.
using Element = std::uint32_t;

inline constexpr std::size_t kDefaultMonoidCap = 100000;

/// Map Q -> Q stored as its image list: position q holds q.t.
class Transformation {
 public:
  Transformation() = default;
  explicit Transformation(std::vector<State> images) : images_(std::move(images)) {}

  static Transformation identity(std::size_t n) {
    std::vector<State> images(n);
    for (std::size_t q = 0; q < n; ++q) images[q] = static_cast<State>(q);
    return Transformation(std::move(images));
  }

  std::size_t degree() const { return images_.size(); }
  State operator[](std::size_t q) const { return images_[q]; }
  const std::vector<State>& images() const { return images_; }

  bool is_constant() const {
    return std::adjacent_find(images_.begin(), images_.end(), std::not_equal_to<>()) ==
           images_.end();
  }

  /// Number of distinct images.
  std::size_t rank() const {
    std::vector<State> sorted = images_;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }

  friend bool operator==(const Transformation&, const Transformation&) = default;

 private:
  std::vector<State> images_;
};

struct TransformationHash {
  std::size_t operator()(const Transformation& t) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (State q : t.images()) {
      h ^= q;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// s then t: result[q] = t[s[q]], matching the left-to-right action of words.
inline Transformation compose(const Transformation& s, const Transformation& t) {
  if (s.degree() != t.degree()) {
    throw PreconditionError("length_mismatch", "composing transformations of different degree");
  }
  std::vector<State> images(s.degree());
  for (std::size_t q = 0; q < images.size(); ++q) images[q] = t[s[q]];
  return Transformation(std::move(images));
}

inline bool is_constant(const Transformation& t) { return t.is_constant(); }

inline Transformation letter_transformation(const Dfa& dfa, Letter a) {
  auto row = dfa.action(a);
  return Transformation(std::vector<State>(row.begin(), row.end()));
}

/// Transition monoid of a Dfa, enumerated breadth-first from the identity.
///
/// Elements are numbered in discovery order. Because letters are tried in
/// alphabet order, each element's witness is the shortest word producing it,
/// and the lexicographically least among those.
class Monoid {
 public:
  static constexpr Element identity() { return 0; }

  std::size_t size() const { return elements_.size(); }
  std::size_t letters() const { return generators_.size(); }
  std::size_t degree() const { return elements_.front().degree(); }

  const Transformation& transformation(Element e) const { return elements_.at(e); }
  const Word& witness(Element e) const { return witnesses_.at(e); }
  Element generator(Letter a) const { return generators_.at(a); }

  /// e * gen(a)
  Element right(Element e, Letter a) const { return right_[e * letters() + a]; }
  /// gen(a) * e
  Element left(Element e, Letter a) const { return left_[e * letters() + a]; }

  std::span<const Element> right_row(Element e) const {
    return std::span<const Element>(right_).subspan(e * letters(), letters());
  }
  std::span<const Element> left_row(Element e) const {
    return std::span<const Element>(left_).subspan(e * letters(), letters());
  }

  /// x * y, by walking the right Cayley graph from x along y's witness.
  Element product(Element x, Element y) const {
    for (Letter a : witnesses_[y]) x = right(x, a);
    return x;
  }

  std::optional<Element> find(const Transformation& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool is_constant(Element e) const { return elements_.at(e).is_constant(); }
  std::size_t rank(Element e) const { return ranks_.at(e); }
  bool is_idempotent(Element e) const { return product(e, e) == e; }

 private:
  friend Monoid transition_monoid(const Dfa& dfa, std::size_t cap);

  Monoid() = default;

  std::vector<Transformation> elements_;
  std::vector<Word> witnesses_;
  std::vector<std::size_t> ranks_;
  std::vector<Element> generators_;
  std::vector<Element> right_;
  std::vector<Element> left_;
  std::unordered_map<Transformation, Element, TransformationHash> index_;
};

/// Enumerates the submonoid generated by the letter transformations. Throws
/// CapExceeded rather than truncating when the monoid has more than `cap`
/// elements.
inline Monoid transition_monoid(const Dfa& dfa, std::size_t cap = kDefaultMonoidCap) {
  const std::size_t k = dfa.letters();
  std::vector<Transformation> letters;
  for (Letter a = 0; a < k; ++a) letters.push_back(letter_transformation(dfa, a));

  Monoid m;
  auto insert = [&](Transformation t, Word witness) -> Element {
    auto [it, fresh] = m.index_.try_emplace(std::move(t), static_cast<Element>(m.elements_.size()));
    if (fresh) {
      if (m.elements_.size() >= cap) {
        throw CapExceeded("transition monoid exceeds " + std::to_string(cap) + " elements");
      }
      m.elements_.push_back(it->first);
      m.ranks_.push_back(it->first.rank());
      m.witnesses_.push_back(std::move(witness));
    }
    return it->second;
  };
  insert(Transformation::identity(dfa.states()), {});

  for (std::size_t e = 0; e < m.elements_.size(); ++e) {
    for (Letter a = 0; a < k; ++a) {
      Word w = m.witnesses_[e];
      w.push_back(a);
      const Element target = insert(compose(m.elements_[e], letters[a]), std::move(w));
      m.right_.push_back(target);
    }
  }
  for (Letter a = 0; a < k; ++a) m.generators_.push_back(m.right_[a]);

  m.left_.resize(m.size() * k);
  for (Element e = 0; e < m.size(); ++e) {
    for (Letter a = 0; a < k; ++a) m.left_[e * k + a] = m.product(m.generators_[a], e);
  }
  return m;
}

/// Sorted set of monoid elements closed under the product.
class SubsemigroupRef {
 public:
  SubsemigroupRef() = default;

  /// Verifies closure; throws PreconditionError("not_closed") otherwise.
  static SubsemigroupRef checked(const Monoid& m, std::vector<Element> elements) {
    SubsemigroupRef ref(m, std::move(elements));
    for (Element x : ref.elements_) {
      for (Element y : ref.elements_) {
        if (!ref.contains(m.product(x, y))) {
          throw PreconditionError("not_closed", "subset is not closed under the product");
        }
      }
    }
    return ref;
  }

  /// For subsets whose closure is established by construction.
  static SubsemigroupRef trusted(const Monoid& m, std::vector<Element> elements) {
    return SubsemigroupRef(m, std::move(elements));
  }

  static SubsemigroupRef whole(const Monoid& m) {
    std::vector<Element> all(m.size());
    for (Element e = 0; e < m.size(); ++e) all[e] = e;
    return SubsemigroupRef(m, std::move(all));
  }

  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Element e) const { return e < member_.size() && member_[e]; }

  bool is_subset_of(const SubsemigroupRef& other) const {
    return std::all_of(elements_.begin(), elements_.end(),
                       [&](Element e) { return other.contains(e); });
  }

  friend bool operator==(const SubsemigroupRef& a, const SubsemigroupRef& b) {
    return a.elements_ == b.elements_;
  }

 private:
  SubsemigroupRef(const Monoid& m, std::vector<Element> elements)
      : elements_(std::move(elements)), member_(m.size(), false) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    if (elements_.empty()) throw PreconditionError("empty_subset", "subsemigroup must be nonempty");
    for (Element e : elements_) member_.at(e) = true;
  }

  std::vector<Element> elements_;
  std::vector<bool> member_;
};

/// The unique idempotent among e, e^2, e^3, ...
inline Element idempotent_power(const Monoid& m, Element e) {
  Element power = e;
  for (std::size_t i = 0; i <= m.size(); ++i) {
    if (m.is_idempotent(power)) return power;
    power = m.product(power, e);
  }
  throw InvariantViolation("no idempotent power found");
}

/// Least two-sided ideal of `within` (the whole monoid by default).
///
/// In a finite transformation semigroup T the minimal ideal is exactly the
/// set of elements of minimum rank: if a has minimum rank and k lies in the
/// kernel, e = (ka)^omega is a kernel idempotent with the same image as a, so
/// a = ae is in the kernel too.
inline SubsemigroupRef kernel(const Monoid& m, const std::optional<SubsemigroupRef>& within = std::nullopt) {
  const SubsemigroupRef domain = within ? *within : SubsemigroupRef::whole(m);
  std::size_t min_rank = m.degree();
  for (Element e : domain.elements()) min_rank = std::min(min_rank, m.rank(e));
  std::vector<Element> out;
  for (Element e : domain.elements()) {
    if (m.rank(e) == min_rank) out.push_back(e);
  }
  return SubsemigroupRef::trusted(m, std::move(out));
}

/// One line per element: index, witness, image vector, tab separated.
inline std::string dump_monoid(const Dfa& dfa, const Monoid& m) {
  std::ostringstream out;
  for (Element e = 0; e < m.size(); ++e) {
    out << e << '\t' << format_word(dfa, m.witness(e)) << "\t[";
    const auto& images = m.transformation(e).images();
    for (std::size_t q = 0; q < images.size(); ++q) out << (q ? "," : "") << images[q];
    out << "]\n";
  }
  return out.str();
}

}  // namespace syncgame
