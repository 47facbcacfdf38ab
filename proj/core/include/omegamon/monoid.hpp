// Copyright 2026 The omegamon Authors.
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

#ifndef OMEGAMON_MONOID_HPP_
#define OMEGAMON_MONOID_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "omegamon/transformation.hpp"

namespace omegamon {

  // Elements of a finite monoid are dense indices into its multiplication
  // table.  Every higher-level module speaks in these indices.
  using element_t = std::uint32_t;

  // Caps applied when materializing monoids.  The memory budget bounds the
  // size of dense tables; it defaults to 1.5 GB and may be overridden by the
  // environment variable OMEGAMON_MEMORY_BUDGET (bytes).
  struct MonoidLimits {
    std::size_t max_elements  = 200'000;
    std::size_t memory_budget = default_memory_budget();

    static std::size_t default_memory_budget();
  };

  // Throws BudgetExceeded unless an n x n table of element_t fits in `limits`.
  void check_table_budget(std::size_t n, MonoidLimits const& limits);

  class FiniteMonoid {
   public:
    // `table[s * size + t]` is the product s t.  Validates ranges, the
    // identity law, and that `generators` generate the whole monoid.
    // Associativity is not checked here, see `is_associative`.
    FiniteMonoid(std::size_t               size,
                 std::vector<element_t>    table,
                 element_t                 identity,
                 std::vector<element_t>    generators,
                 std::vector<std::string>  labels = {});

    static FiniteMonoid trivial();
    // The cyclic group of order k >= 1, generated by g = element 1.
    static FiniteMonoid cyclic_group(std::size_t k);
    // <a | a^(index + period) = a^index>, index >= 1, period >= 1; element i
    // is a^i.
    static FiniteMonoid monogenic(std::size_t index, std::size_t period);

    std::size_t size() const noexcept {
      return _size;
    }

    element_t product(element_t s, element_t t) const noexcept {
      return _table[static_cast<std::size_t>(s) * _size + t];
    }

    element_t identity() const noexcept {
      return _identity;
    }

    std::vector<element_t> const& generators() const noexcept {
      return _generators;
    }

    std::span<element_t const> table() const noexcept {
      return _table;
    }

    std::span<element_t const> row(element_t s) const noexcept {
      return {_table.data() + static_cast<std::size_t>(s) * _size, _size};
    }

    bool has_labels() const noexcept {
      return !_labels.empty();
    }

    // Shortest generating word of s, "1" for the empty word; "#s" when the
    // monoid carries no labels.
    std::string label(element_t s) const;

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    bool is_idempotent(element_t s) const noexcept {
      return product(s, s) == s;
    }

    std::vector<element_t> idempotents() const;

    // s^e for e >= 0, by repeated squaring.
    element_t power(element_t s, std::uint64_t e) const noexcept;

    // Least m >= 1 with s^m = s^(m + p) for some p >= 1.
    std::size_t index(element_t s) const noexcept {
      return _index[s];
    }

    // Least p >= 1 with s^index = s^(index + p).
    std::size_t period(element_t s) const noexcept {
      return _period[s];
    }

    // The unique idempotent power of s.
    element_t omega(element_t s) const noexcept {
      return _omega[s];
    }

    // s^(omega + k): the element s^e with e >= index(s) and
    // e == k (mod period(s)); k == 0 gives omega(s).  Negative k are inverses
    // in the maximal subgroup at omega(s).
    element_t omega_power(element_t s, std::int64_t k) const noexcept;

    // Evaluate a word over generator positions (indices into generators()).
    element_t evaluate(std::span<std::size_t const> word) const;

    // Invertible elements form a group iff the identity is the only
    // idempotent.
    bool is_group() const noexcept;

    bool operator==(FiniteMonoid const& that) const noexcept {
      return _size == that._size && _identity == that._identity
             && _generators == that._generators && _table == that._table;
    }

   private:
    void compute_power_data();

    std::size_t              _size;
    std::vector<element_t>   _table;
    element_t                _identity;
    std::vector<element_t>   _generators;
    std::vector<std::string> _labels;
    std::vector<std::uint32_t> _index;
    std::vector<std::uint32_t> _period;
    std::vector<element_t>   _omega;
  };

  // Full triple loop when size <= 500, Light's test against the generators
  // otherwise.
  bool is_associative(FiniteMonoid const& M);

  // A transformation monoid together with the transformations realizing its
  // elements (elements()[s] is the transformation of element s).
  struct TransformationMonoid {
    FiniteMonoid                monoid;
    std::vector<Transformation> elements;
  };

  // Closure of `gens` under composition, with the identity adjoined as
  // element 0.  Elements are numbered by breadth-first search over
  // length-lex words, so labels are shortest words with ties broken by
  // generator order.  Letter i of a label is `letters[i]` (default
  // "abc...").
  TransformationMonoid transformation_monoid(
      std::vector<Transformation> const& gens,
      std::string_view                   letters = {},
      MonoidLimits const&                limits  = {});

  FiniteMonoid from_generators(std::vector<Transformation> const& gens,
                               std::string_view                   letters = {},
                               MonoidLimits const&                limits = {});

  // The submonoid of M generated by `gens`, numbered by breadth-first search
  // like from_generators.  to_parent[i] is element i as an element of M;
  // labels are inherited from M.
  struct Submonoid {
    FiniteMonoid           monoid;
    std::vector<element_t> to_parent;
  };

  Submonoid submonoid(FiniteMonoid const&            M,
                      std::span<element_t const>     gens,
                      MonoidLimits const&            limits = {});

  // Line-based text format:
  //   size k
  //   identity i
  //   generators i j ...
  //   k rows of k space-separated indices (row s holds the products s t)
  // Optional trailing lines "label i word" carry element labels.
  void         write_monoid(std::ostream& out, FiniteMonoid const& M);
  FiniteMonoid read_monoid(std::istream& in);
  std::string  to_monoid_text(FiniteMonoid const& M);
  FiniteMonoid from_monoid_text(std::string_view text);
  FiniteMonoid load_monoid_file(std::string const& path);

}  // namespace omegamon

#endif  // OMEGAMON_MONOID_HPP_
