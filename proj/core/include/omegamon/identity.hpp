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

#ifndef OMEGAMON_IDENTITY_HPP_
#define OMEGAMON_IDENTITY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "omegamon/monoid.hpp"
#include "omegamon/order.hpp"
#include "omegamon/term.hpp"

namespace omegamon {

  enum class Relation : std::uint8_t { equal, less_equal };

  struct Pseudoidentity {
    Term     lhs;
    Term     rhs;
    Relation relation = Relation::equal;

    // Sorted union of the variables of both sides.
    std::string variables() const;
    // "lhs = rhs" or "lhs <= rhs".
    std::string to_string() const;

    bool operator==(Pseudoidentity const&) const = default;
  };

  // Accepts "T = T" and "T <= T".
  Pseudoidentity parse_pseudoidentity(std::string_view text);
  Pseudoidentity equation(std::string_view lhs, std::string_view rhs);
  Pseudoidentity inequality(std::string_view lhs, std::string_view rhs);

  // values[i] is bound to variables[i].
  struct Substitution {
    std::string            variables;
    std::vector<element_t> values;

    // "x=ab, y=1" using the labels of M.
    std::string to_string(FiniteMonoid const& M) const;

    bool operator==(Substitution const&) const = default;
  };

  struct CheckOptions {
    // Refuse with BudgetExceeded when the substitution space is larger,
    // unless `override_budget` is set.
    std::uint64_t max_substitutions = 1'000'000'000;
    bool          override_budget   = false;
  };

  struct CheckResult {
    bool                        holds = true;
    std::optional<Substitution> witness;
    element_t                   lhs_value = 0;  // at the witness
    element_t                   rhs_value = 0;
    std::uint64_t               substitutions = 0;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  // Exhaustive check over all substitutions into `domain` (all of M when
  // empty).  Substitutions are enumerated as an odometer over the sorted
  // variables, the first variable most significant and values in `domain`
  // order, so the witness is the lexicographically first failure.
  CheckResult check_identity(FiniteMonoid const&        M,
                             Pseudoidentity const&      identity,
                             std::span<element_t const> domain  = {},
                             CheckOptions const&        options = {});

  // As check_identity, comparing with the order of OM.  Equations are
  // accepted and checked as equations.
  CheckResult check_inequality(OrderedMonoid const&       OM,
                               Pseudoidentity const&      identity,
                               std::span<element_t const> domain  = {},
                               CheckOptions const&        options = {});

  // Number of substitutions an exhaustive check would visit, saturating at
  // UINT64_MAX.
  std::uint64_t substitution_count(std::size_t domain_size, std::size_t variables);

  // Random substitutions drawn with a seeded generator; returns the first
  // failing one found.
  std::optional<Substitution> sample_failure(OrderedMonoid const&  OM,
                                             Pseudoidentity const& identity,
                                             std::size_t           samples,
                                             std::uint64_t         seed);

}  // namespace omegamon

#endif  // OMEGAMON_IDENTITY_HPP_
