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

#include "omegamon/identity.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "omegamon/error.hpp"

namespace omegamon {

  std::string Pseudoidentity::variables() const {
    std::string v = lhs.variables() + rhs.variables();
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  std::string Pseudoidentity::to_string() const {
    return lhs.to_string() + (relation == Relation::equal ? " = " : " <= ")
           + rhs.to_string();
  }

  Pseudoidentity parse_pseudoidentity(std::string_view text) {
    auto const le = text.find("<=");
    if (le != std::string_view::npos) {
      return {parse_term(text.substr(0, le)), parse_term(text.substr(le + 2)),
              Relation::less_equal};
    }
    auto const eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected '=' or '<='", text.size());
    }
    return {parse_term(text.substr(0, eq)), parse_term(text.substr(eq + 1)),
            Relation::equal};
  }

  Pseudoidentity equation(std::string_view lhs, std::string_view rhs) {
    return {parse_term(lhs), parse_term(rhs), Relation::equal};
  }

  Pseudoidentity inequality(std::string_view lhs, std::string_view rhs) {
    return {parse_term(lhs), parse_term(rhs), Relation::less_equal};
  }

  std::string Substitution::to_string(FiniteMonoid const& M) const {
    std::string out;
    for (std::size_t i = 0; i < variables.size(); ++i) {
      if (i != 0) {
        out += ", ";
      }
      out.push_back(variables[i]);
      out.push_back('=');
      out += M.label(values[i]);
    }
    return out;
  }

  std::uint64_t substitution_count(std::size_t domain_size, std::size_t variables) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < variables; ++i) {
      if (domain_size != 0
          && total > std::numeric_limits<std::uint64_t>::max() / domain_size) {
        return std::numeric_limits<std::uint64_t>::max();
      }
      total *= domain_size;
    }
    return total;
  }

  namespace {

    template <typename Compare>
    CheckResult exhaustive(FiniteMonoid const&        M,
                           Pseudoidentity const&      identity,
                           std::span<element_t const> domain,
                           CheckOptions const&        options,
                           Compare&&                  compare) {
      std::vector<element_t> all;
      if (domain.empty()) {
        all.resize(M.size());
        std::iota(all.begin(), all.end(), element_t{0});
        domain = all;
      }
      for (auto d : domain) {
        if (d >= M.size()) {
          throw InvalidArgument("domain element " + std::to_string(d) + " out of range");
        }
      }
      std::string const  vars  = identity.variables();
      std::size_t const  k     = vars.size();
      std::uint64_t const space = substitution_count(domain.size(), k);
      if (space > options.max_substitutions && !options.override_budget) {
        throw BudgetExceeded("identity check needs " + std::to_string(domain.size()) + "^"
                             + std::to_string(k) + " substitutions, above the limit of "
                             + std::to_string(options.max_substitutions));
      }
      CompiledTerm const     lhs(identity.lhs, vars);
      CompiledTerm const     rhs(identity.rhs, vars);
      std::vector<element_t> scratch(std::max(lhs.stack_depth(), rhs.stack_depth()));
      std::vector<std::size_t> digits(k, 0);
      std::vector<element_t>   values(k, domain.empty() ? 0 : domain[0]);

      CheckResult result;
      while (true) {
        ++result.substitutions;
        element_t const l = lhs.evaluate(M, values, scratch);
        element_t const r = rhs.evaluate(M, values, scratch);
        if (!compare(l, r)) {
          result.holds     = false;
          result.witness   = Substitution{vars, values};
          result.lhs_value = l;
          result.rhs_value = r;
          return result;
        }
        // Advance the odometer, last variable fastest.
        std::size_t i = k;
        while (i > 0) {
          --i;
          if (++digits[i] < domain.size()) {
            values[i] = domain[digits[i]];
            break;
          }
          digits[i] = 0;
          values[i] = domain[0];
          if (i == 0) {
            return result;
          }
        }
        if (k == 0) {
          return result;
        }
      }
    }

  }  // namespace

  CheckResult check_identity(FiniteMonoid const&        M,
                             Pseudoidentity const&      identity,
                             std::span<element_t const> domain,
                             CheckOptions const&        options) {
    if (identity.relation != Relation::equal) {
      throw InvalidArgument("check_identity needs an equation, found "
                            + identity.to_string());
    }
    return exhaustive(M, identity, domain, options,
                      [](element_t l, element_t r) { return l == r; });
  }

  CheckResult check_inequality(OrderedMonoid const&       OM,
                               Pseudoidentity const&      identity,
                               std::span<element_t const> domain,
                               CheckOptions const&        options) {
    if (identity.relation == Relation::equal) {
      return check_identity(OM.monoid(), identity, domain, options);
    }
    return exhaustive(OM.monoid(), identity, domain, options,
                      [&OM](element_t l, element_t r) { return OM.leq(l, r); });
  }

  std::optional<Substitution> sample_failure(OrderedMonoid const&  OM,
                                             Pseudoidentity const& identity,
                                             std::size_t           samples,
                                             std::uint64_t         seed) {
    FiniteMonoid const& M    = OM.monoid();
    std::string const   vars = identity.variables();
    CompiledTerm const  lhs(identity.lhs, vars);
    CompiledTerm const  rhs(identity.rhs, vars);
    std::mt19937_64     rng(seed);
    std::uniform_int_distribution<element_t> pick(0, static_cast<element_t>(M.size() - 1));
    std::vector<element_t> values(vars.size());
    for (std::size_t s = 0; s < samples; ++s) {
      for (auto& v : values) {
        v = pick(rng);
      }
      element_t const l  = lhs.evaluate(M, values);
      element_t const r  = rhs.evaluate(M, values);
      bool const      ok = identity.relation == Relation::equal ? l == r : OM.leq(l, r);
      if (!ok) {
        return Substitution{vars, values};
      }
    }
    return std::nullopt;
  }

}  // namespace omegamon
