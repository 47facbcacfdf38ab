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

#ifndef OMEGAMON_ORDER_HPP_
#define OMEGAMON_ORDER_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "omegamon/bit_matrix.hpp"
#include "omegamon/monoid.hpp"

namespace omegamon {

  // A finite monoid with a stable partial order; leq.test(a, b) means a <= b.
  class OrderedMonoid {
   public:
    // Throws InvalidArgument unless `leq` is a stable partial order on M.
    OrderedMonoid(FiniteMonoid monoid, BitMatrix leq);

    // M ordered by equality.
    static OrderedMonoid trivially_ordered(FiniteMonoid monoid);

    FiniteMonoid const& monoid() const noexcept {
      return _monoid;
    }

    BitMatrix const& order() const noexcept {
      return _leq;
    }

    bool leq(element_t a, element_t b) const noexcept {
      return _leq.test(a, b);
    }

   private:
    FiniteMonoid _monoid;
    BitMatrix    _leq;
  };

  using ElementPair = std::pair<element_t, element_t>;

  // Reflexive, transitive, and closed under (a, b) -> (x a y, x b y).
  bool is_stable_quasiorder(FiniteMonoid const& M, BitMatrix const& rel);

  struct StableClosure {
    BitMatrix                  quasiorder;
    bool                       antisymmetric = true;
    // a != b with a <= b <= a, when not antisymmetric.
    std::optional<ElementPair> violation;
    // Present exactly when antisymmetric.
    std::optional<OrderedMonoid> ordered;
  };

  // Least stable quasiorder containing `required`.  If it is antisymmetric
  // then M admits a compatible order satisfying every required pair.
  StableClosure stable_closure(FiniteMonoid const&             M,
                               std::vector<ElementPair> const& required);

  // The pairs (1, s^n) for every s in M: used to ask whether M can be
  // ordered so that 1 <= x^n holds.
  std::vector<ElementPair> one_below_powers(FiniteMonoid const& M,
                                            std::uint64_t       n);

}  // namespace omegamon

#endif  // OMEGAMON_ORDER_HPP_
