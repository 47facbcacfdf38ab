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

#include <optional>
#include <string>
#include <unordered_map>

#include "omegamon/error.hpp"
#include "omegamon/pseudovariety.hpp"

namespace omegamon {

  namespace {

    std::string burnside_letters(std::size_t k) {
      static constexpr std::string_view pool
          = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
      if (k > pool.size()) {
        throw Unsupported("pair monoid supports at most " + std::to_string(pool.size())
                          + " generators, found " + std::to_string(k));
      }
      return std::string(pool.substr(0, k));
    }

    std::optional<element_t> zero_of(FiniteMonoid const& M) {
      for (element_t z = 0; z < M.size(); ++z) {
        bool absorbing = true;
        for (element_t s = 0; s < M.size() && absorbing; ++s) {
          absorbing = M.product(z, s) == z && M.product(s, z) == z;
        }
        if (absorbing) {
          return z;
        }
      }
      return std::nullopt;
    }

  }  // namespace

  PairMonoid pair_monoid(FiniteMonoid const& M, unsigned n, PairMonoidLimits const& limits) {
    auto const&          gens = M.generators();
    std::size_t const    k    = gens.size();
    BurnsideOracle const B(burnside_letters(k), n);

    PairMonoid P;
    P.n = n;
    std::unordered_map<BurnsideElement, std::uint32_t, BurnsideElementHash> h_ids;
    // Right multiplication of group element i by generator g, filled lazily.
    std::vector<std::uint32_t> h_next;
    constexpr std::uint32_t    unknown = UINT32_MAX;

    auto intern = [&](BurnsideElement e) {
      auto [it, inserted] = h_ids.try_emplace(e, static_cast<std::uint32_t>(P.group_elements.size()));
      if (inserted) {
        P.group_elements.push_back(std::move(e));
        h_next.resize(h_next.size() + k, unknown);
      }
      return it->second;
    };
    P.identity_h = intern(B.identity());

    // Once (0, h) is a pair for one h it is a pair for every h, since the
    // second components run through all of B.  Those pairs stay implicit.
    std::optional<element_t> const zero = M.size() > 1 ? zero_of(M) : std::nullopt;
    bool                           zero_reached = false;

    std::unordered_map<std::uint64_t, std::uint32_t> seen;
    auto key = [](element_t m, std::uint32_t h) {
      return (static_cast<std::uint64_t>(h) << 32U) | m;
    };
    P.m.push_back(M.identity());
    P.h.push_back(P.identity_h);
    seen.emplace(key(M.identity(), P.identity_h), 0);
    for (std::size_t pos = 0; pos < P.m.size(); ++pos) {
      for (std::size_t g = 0; g < k; ++g) {
        std::uint32_t const h = P.h[pos];
        if (h_next[h * k + g] == unknown) {
          BurnsideElement next = P.group_elements[h];
          B.multiply_generator(next, g);
          std::uint32_t const id = intern(std::move(next));
          h_next[h * k + g]      = id;
        }
        std::uint32_t const h2 = h_next[h * k + g];
        element_t const     m2 = M.product(P.m[pos], gens[g]);
        if (m2 == zero) {
          zero_reached = true;
          continue;
        }
        if (seen.emplace(key(m2, h2), static_cast<std::uint32_t>(P.m.size())).second) {
          if (P.m.size() >= limits.max_pairs) {
            throw BudgetExceeded("pair monoid exceeds " + std::to_string(limits.max_pairs)
                                 + " pairs");
          }
          P.m.push_back(m2);
          P.h.push_back(h2);
        }
      }
    }
    if (zero_reached) {
      P.zero = zero;
    }

    // Close the listed group elements under inverses.
    for (std::uint32_t i = 0; i < P.group_elements.size(); ++i) {
      intern(B.inverse(P.group_elements[i]));
    }
    std::size_t const groups = P.group_elements.size();
    P.group_inverse.assign(groups, unknown);
    for (std::uint32_t i = 0; i < groups; ++i) {
      P.group_inverse[i] = h_ids.at(B.inverse(P.group_elements[i]));
    }

    P.fiber_by_h.assign(groups, {});
    std::vector<std::vector<bool>> present(groups, std::vector<bool>(M.size(), false));
    for (std::size_t p = 0; p < P.m.size(); ++p) {
      present[P.h[p]][P.m[p]] = true;
    }
    for (std::size_t i = 0; i < groups; ++i) {
      if (P.zero) {
        present[i][*P.zero] = true;
      }
      for (element_t m = 0; m < M.size(); ++m) {
        if (present[i][m]) {
          P.fiber_by_h[i].push_back(m);
        }
      }
    }
    return P;
  }

}  // namespace omegamon
