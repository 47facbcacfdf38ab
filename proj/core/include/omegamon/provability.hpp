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

#ifndef OMEGAMON_PROVABILITY_HPP_
#define OMEGAMON_PROVABILITY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omegamon/identity.hpp"
#include "omegamon/monoid.hpp"

namespace omegamon {

  // Insert base^n before position `position` of the current word.
  struct InsertionStep {
    std::size_t position = 0;
    std::string base;

    bool operator==(InsertionStep const&) const = default;
  };

  struct InsertionProof {
    std::string                start;
    std::vector<InsertionStep> steps;
    std::string                end;
    unsigned                   n = 2;

    // Apply the steps to `start`; throws InvalidArgument on a bad step.
    std::string replay() const;
  };

  // All words x w^n y with word = x y, w a nonempty word over `alphabet`
  // and |x w^n y| <= max_len, sorted by length then lexicographically.
  std::vector<std::string> successors(std::string_view word,
                                      unsigned         n,
                                      std::size_t      max_len,
                                      std::string_view alphabet);

  struct ProvabilityOptions {
    // Distinct intermediate words explored before giving up.
    std::size_t max_nodes = 5'000'000;
  };

  struct ProvabilityResult {
    bool                          provable = false;
    std::optional<InsertionProof> proof;
    // Why a negative answer was reached ("letter counts differ mod n", ...).
    std::string reason;
    std::size_t explored = 0;
  };

  // Decide whether v arises from u by insertions of n-th powers.  Runs
  // cheap necessary conditions first, then a breadth-first search from v
  // deleting n-th power factors.  The returned proof has the fewest steps
  // and depends only on the input.
  // Throws BudgetExceeded past options.max_nodes.
  ProvabilityResult provable_leq(std::string_view          u,
                                 std::string_view          v,
                                 unsigned                  n,
                                 ProvabilityOptions const& options = {});

  struct ConsequenceResult {
    bool holds = true;
    // "a", "b" or "c" and the failing equation, when !holds.
    std::string                     item;
    std::optional<Pseudoidentity>   identity;
    std::optional<Substitution>     witness;
    bool                            checked_c = false;
  };

  // The consequences of u <= v being provable from 1 <= x^n, read with the
  // letters of u, v as variables over M:
  //   (a) v^(w+1) = u^(w+1) v^w = v^w u^(w+1)
  //   (b) v^w = u^w v^w = v^w u^w
  //   (c) u^(w+1) = v^(w+1), only when v <= u is provable as well.
  // The caller is responsible for u <= v being provable.
  ConsequenceResult check_consequences(FiniteMonoid const& M,
                                       std::string_view    u,
                                       std::string_view    v,
                                       unsigned            n,
                                       CheckOptions const& options = {});

  // Equations (a), (b), and (c) for the pair u, v.
  std::vector<std::pair<std::string, Pseudoidentity>> consequence_equations(
      std::string_view u, std::string_view v, bool include_c);

}  // namespace omegamon

#endif  // OMEGAMON_PROVABILITY_HPP_
