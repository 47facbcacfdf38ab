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

#include "omegamon/order.hpp"

#include "omegamon/error.hpp"

namespace omegamon {

  bool is_stable_quasiorder(FiniteMonoid const& M, BitMatrix const& rel) {
    std::size_t const n = M.size();
    if (rel.size() != n) {
      return false;
    }
    for (element_t a = 0; a < n; ++a) {
      if (!rel.test(a, a)) {
        return false;
      }
    }
    for (element_t a = 0; a < n; ++a) {
      for (element_t b = 0; b < n; ++b) {
        if (!rel.test(a, b)) {
          continue;
        }
        if (!rel.row_subset(b, a)) {
          return false;
        }
        // Stability under generators implies stability under all elements.
        for (auto g : M.generators()) {
          if (!rel.test(M.product(a, g), M.product(b, g))
              || !rel.test(M.product(g, a), M.product(g, b))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  OrderedMonoid::OrderedMonoid(FiniteMonoid monoid, BitMatrix leq)
      : _monoid(std::move(monoid)), _leq(std::move(leq)) {
    if (!is_stable_quasiorder(_monoid, _leq)) {
      throw InvalidArgument("order is not a stable quasiorder");
    }
    for (element_t a = 0; a < _monoid.size(); ++a) {
      for (element_t b = a + 1; b < _monoid.size(); ++b) {
        if (_leq.test(a, b) && _leq.test(b, a)) {
          throw InvalidArgument("order is not antisymmetric");
        }
      }
    }
  }

  OrderedMonoid OrderedMonoid::trivially_ordered(FiniteMonoid monoid) {
    BitMatrix eq(monoid.size());
    for (std::size_t i = 0; i < monoid.size(); ++i) {
      eq.set(i, i);
    }
    return OrderedMonoid(std::move(monoid), std::move(eq));
  }

  StableClosure stable_closure(FiniteMonoid const&             M,
                               std::vector<ElementPair> const& required) {
    std::size_t const        n = M.size();
    BitMatrix                rel(n);
    std::vector<ElementPair> work;
    auto add = [&](element_t a, element_t b) {
      if (!rel.test(a, b)) {
        rel.set(a, b);
        work.emplace_back(a, b);
      }
    };
    for (element_t a = 0; a < n; ++a) {
      rel.set(a, a);
    }
    for (auto [a, b] : required) {
      if (a >= n || b >= n) {
        throw InvalidArgument("stable_closure: pair out of range");
      }
      add(a, b);
    }
    while (!work.empty()) {
      auto const [a, b] = work.back();
      work.pop_back();
      for (auto g : M.generators()) {
        add(M.product(a, g), M.product(b, g));
        add(M.product(g, a), M.product(g, b));
      }
    }
    // The transitive closure of a stable relation is stable.
    rel.transitive_closure();

    StableClosure result;
    for (element_t a = 0; a < n && result.antisymmetric; ++a) {
      for (element_t b = a + 1; b < n; ++b) {
        if (rel.test(a, b) && rel.test(b, a)) {
          result.antisymmetric = false;
          result.violation     = ElementPair(a, b);
          break;
        }
      }
    }
    if (result.antisymmetric) {
      result.ordered.emplace(M, rel);
    }
    result.quasiorder = std::move(rel);
    return result;
  }

  std::vector<ElementPair> one_below_powers(FiniteMonoid const& M, std::uint64_t n) {
    std::vector<ElementPair> result;
    for (element_t s = 0; s < M.size(); ++s) {
      result.emplace_back(M.identity(), M.power(s, n));
    }
    return result;
  }

}  // namespace omegamon
