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

#ifndef OMEGAMON_PSEUDOVARIETY_HPP_
#define OMEGAMON_PSEUDOVARIETY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omegamon/burnside.hpp"
#include "omegamon/identity.hpp"
#include "omegamon/monoid.hpp"

namespace omegamon {

  enum class Variety : std::uint8_t {
    J,
    A,
    Gn,
    BG,
    BGn_U,
    BGn_V,
    BGn_W,
    EJn,
    BHn,
    J_malcev_Hn,     // J Mal'cev product with [[x^n = 1]]
    J_semidirect_Hn  // J semidirect product with [[x^n = 1]]
  };

  // All varieties in report order.
  std::vector<Variety> const& all_varieties();
  std::string_view            variety_name(Variety v);
  // Accepts the names above, plus "BGn" for BGn_W.
  std::optional<Variety> parse_variety(std::string_view name);
  // True for the varieties whose deciders need a Burnside oracle.
  bool needs_burnside(Variety v) noexcept;

  enum class Verdict : std::uint8_t { member, not_member, unsupported, budget_exceeded };

  std::string_view verdict_name(Verdict v);

  struct MembershipReport {
    Variety  variety = Variety::J;
    unsigned n       = 0;
    Verdict  verdict = Verdict::member;
    // Human-readable reason for a negative or missing verdict.
    std::string certificate;
    // For negative verdicts: a pseudoidentity failing in M at `witness`
    // (values are elements of M).
    std::optional<Pseudoidentity> identity;
    std::optional<Substitution>   witness;
    element_t                     lhs_value = 0;
    element_t                     rhs_value = 0;
    double                        millis    = 0;

    bool member() const noexcept {
      return verdict == Verdict::member;
    }
  };

  // The submonoid of M x B(k, n) generated by the pairs (g_i, a_i), where
  // g_i is the i-th generator of M and a_i the i-th free generator.
  //
  // When M has a zero 0 and some (0, g) is a pair, then (0, g) is a pair for
  // every g in B(k, n).  Those pairs are not listed in m and h; `zero` is
  // set and 0 belongs to every fiber.
  struct PairMonoid {
    unsigned                     n = 0;
    std::vector<element_t>       m;        // first component of each pair
    std::vector<std::uint32_t>   h;        // index into group_elements
    std::vector<BurnsideElement> group_elements;
    std::uint32_t                identity_h = 0;
    // group_inverse[i] indexes the inverse of group_elements[i].
    std::vector<std::uint32_t>   group_inverse;
    // fiber_by_h[i]: sorted distinct m with (m, group_elements[i]) a pair.
    std::vector<std::vector<element_t>> fiber_by_h;
    std::optional<element_t>            zero;

    // Listed pairs, excluding the implicit zero pairs.
    std::size_t size() const noexcept {
      return m.size();
    }

    // S = {m : (m, 1) is a pair}, a submonoid of M.
    std::vector<element_t> const& fiber() const noexcept {
      return fiber_by_h[identity_h];
    }
  };

  struct PairMonoidLimits {
    std::size_t max_pairs = 5'000'000;
  };

  // Throws Unsupported for n outside {1, 2, 3}, BudgetExceeded past the cap.
  PairMonoid pair_monoid(FiniteMonoid const& M, unsigned n, PairMonoidLimits const& limits = {});

  struct MembershipOptions {
    CheckOptions     check;
    PairMonoidLimits pairs;
    // Cap on the pair comparisons of the semidirect decider.
    std::uint64_t max_knast_pairs = 1'000'000'000;
  };

  // Defining identities for the identity-based varieties.
  std::vector<Pseudoidentity> variety_basis(Variety v, unsigned n);

  // Decide membership of M.  n is ignored for J, A, BG.  Budget overruns and
  // missing Burnside oracles are reported through the verdict.
  MembershipReport membership(FiniteMonoid const&      M,
                              Variety                  v,
                              unsigned                 n,
                              MembershipOptions const& options = {});

  // For all s, t in the fiber S: s^(w+1) = s^w and (st)^w = (ts)^w.
  MembershipReport in_J_malcev_Burnside(FiniteMonoid const&      M,
                                        unsigned                 n,
                                        MembershipOptions const& options = {});

  // For pairs (m_x, h), (m_y, h^-1), (m_z, h), (m_t, h^-1):
  //   (m_x m_y)^w m_x m_t (m_z m_t)^w = (m_x m_y)^w (m_z m_t)^w.
  MembershipReport in_J_semidirect_Burnside(FiniteMonoid const&      M,
                                            unsigned                 n,
                                            MembershipOptions const& options = {});

  // One report per variety, in all_varieties() order.
  std::vector<MembershipReport> survey(FiniteMonoid const&      M,
                                       unsigned                 n,
                                       MembershipOptions const& options = {});

}  // namespace omegamon

#endif  // OMEGAMON_PSEUDOVARIETY_HPP_
