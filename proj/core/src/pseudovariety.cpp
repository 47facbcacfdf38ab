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

#include "omegamon/pseudovariety.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <unordered_set>

#include "omegamon/error.hpp"
#include "omegamon/green.hpp"

namespace omegamon {

  std::vector<Variety> const& all_varieties() {
    static std::vector<Variety> const all{Variety::J,     Variety::A,     Variety::Gn,
                                          Variety::BG,    Variety::BGn_U, Variety::BGn_V,
                                          Variety::BGn_W, Variety::EJn,   Variety::BHn,
                                          Variety::J_malcev_Hn, Variety::J_semidirect_Hn};
    return all;
  }

  std::string_view variety_name(Variety v) {
    switch (v) {
      case Variety::J:
        return "J";
      case Variety::A:
        return "A";
      case Variety::Gn:
        return "Gn";
      case Variety::BG:
        return "BG";
      case Variety::BGn_U:
        return "BGn_U";
      case Variety::BGn_V:
        return "BGn_V";
      case Variety::BGn_W:
        return "BGn_W";
      case Variety::EJn:
        return "EJn";
      case Variety::BHn:
        return "BHn";
      case Variety::J_malcev_Hn:
        return "J_malcev_Hn";
      case Variety::J_semidirect_Hn:
        return "J_semidirect_Hn";
    }
    return "?";
  }

  std::optional<Variety> parse_variety(std::string_view name) {
    if (name == "BGn") {
      return Variety::BGn_W;
    }
    for (auto v : all_varieties()) {
      if (variety_name(v) == name) {
        return v;
      }
    }
    return std::nullopt;
  }

  bool needs_burnside(Variety v) noexcept {
    return v == Variety::J_malcev_Hn || v == Variety::J_semidirect_Hn;
  }

  std::string_view verdict_name(Verdict v) {
    switch (v) {
      case Verdict::member:
        return "member";
      case Verdict::not_member:
        return "not_member";
      case Verdict::unsupported:
        return "unsupported";
      case Verdict::budget_exceeded:
        return "budget_exceeded";
    }
    return "?";
  }

  namespace {

    std::vector<Pseudoidentity> j_basis() {
      return {equation("x^(w+1)", "x^w"), equation("(xy)^w", "(yx)^w")};
    }

    std::string power_suffix(unsigned n) {
      return std::to_string(n);
    }

    // Short-circuiting check of `basis` on `domain`; fills `report` with the
    // first failure.
    bool check_basis(FiniteMonoid const&                M,
                     std::vector<Pseudoidentity> const& basis,
                     std::span<element_t const>         domain,
                     CheckOptions const&                options,
                     MembershipReport&                  report) {
      for (auto const& id : basis) {
        auto const result = check_identity(M, id, domain, options);
        if (!result.holds) {
          report.verdict   = Verdict::not_member;
          report.identity  = id;
          report.witness   = result.witness;
          report.lhs_value = result.lhs_value;
          report.rhs_value = result.rhs_value;
          report.certificate
              = id.to_string() + " fails at " + result.witness->to_string(M) + ": "
                + M.label(result.lhs_value) + " != " + M.label(result.rhs_value);
          return false;
        }
      }
      return true;
    }

    // The submonoid generated by `gens` is J-trivial; otherwise a J
    // identity failing on its elements is recorded.
    bool generated_j_trivial(FiniteMonoid const&      M,
                             std::vector<element_t>   gens,
                             std::string const&       what,
                             CheckOptions const&      options,
                             MembershipReport&        report) {
      std::sort(gens.begin(), gens.end());
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
      auto const sub = submonoid(M, gens);
      if (green_data(sub.monoid).is_j_trivial()) {
        return true;
      }
      std::vector<element_t> domain = sub.to_parent;
      std::sort(domain.begin(), domain.end());
      if (check_basis(M, j_basis(), domain, options, report)) {
        throw InvariantViolation("Green's relations and J identities disagree on the "
                                 + what);
      }
      report.certificate = "the " + what + " is not J-trivial: " + report.certificate;
      return false;
    }

    void decide(FiniteMonoid const&      M,
                Variety                  v,
                unsigned                 n,
                MembershipOptions const& options,
                MembershipReport&        report) {
      switch (v) {
        case Variety::J:
          if (!green_data(M).is_j_trivial()) {
            if (check_basis(M, j_basis(), {}, options.check, report)) {
              throw InvariantViolation("Green's relations and J identities disagree");
            }
          }
          return;
        case Variety::EJn: {
          std::vector<element_t> gens;
          for (element_t s = 0; s < M.size(); ++s) {
            gens.push_back(M.power(s, n));
          }
          generated_j_trivial(M, std::move(gens), "submonoid generated by n-th powers",
                              options.check, report);
          return;
        }
        case Variety::BHn:
          if (generated_j_trivial(M, M.idempotents(), "submonoid generated by idempotents",
                                  options.check, report)) {
            check_basis(M, variety_basis(v, n), {}, options.check, report);
          }
          return;
        case Variety::J_malcev_Hn:
          report = in_J_malcev_Burnside(M, n, options);
          return;
        case Variety::J_semidirect_Hn:
          report = in_J_semidirect_Burnside(M, n, options);
          return;
        default:
          check_basis(M, variety_basis(v, n), {}, options.check, report);
          return;
      }
    }

    double elapsed_ms(std::chrono::steady_clock::time_point start) {
      return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
    }

  }  // namespace

  std::vector<Pseudoidentity> variety_basis(Variety v, unsigned n) {
    std::string const k = power_suffix(n);
    switch (v) {
      case Variety::J:
        return j_basis();
      case Variety::A:
        return {equation("x^(w+1)", "x^w")};
      case Variety::Gn:
        return {equation("x^" + k, "1")};
      case Variety::BG:
        return {equation("(x^w y)^w", "(y x^w)^w")};
      case Variety::BGn_U:
        return {equation("x^(w+" + k + ")", "x^w"), equation("(x y^" + k + ")^w", "(y^" + k + " x)^w")};
      case Variety::BGn_V:
        return {equation("x^(w+" + k + ")", "x^w"), equation("(x y^w)^w", "(y^" + k + " x)^w")};
      case Variety::BGn_W:
        return {equation("(x^w y)^w", "(y x^w)^w"),
                equation("(x y^w z)^(w+1)", "(x y^" + k + " z)^(w+1)")};
      case Variety::BHn:
        return {equation("x^(w+" + k + ")", "x^w")};
      case Variety::EJn:
      case Variety::J_malcev_Hn:
      case Variety::J_semidirect_Hn:
        break;
    }
    throw InvalidArgument(std::string(variety_name(v)) + " has no finite identity basis here");
  }

  MembershipReport membership(FiniteMonoid const&      M,
                              Variety                  v,
                              unsigned                 n,
                              MembershipOptions const& options) {
    auto const       start = std::chrono::steady_clock::now();
    MembershipReport report;
    report.variety = v;
    report.n       = n;
    bool const uses_n
        = v != Variety::J && v != Variety::A && v != Variety::BG;
    if (uses_n && n == 0) {
      throw InvalidArgument("n must be positive for " + std::string(variety_name(v)));
    }
    try {
      decide(M, v, n, options, report);
    } catch (BudgetExceeded const& e) {
      report          = MembershipReport{};
      report.variety  = v;
      report.n        = n;
      report.verdict  = Verdict::budget_exceeded;
      report.certificate = e.what();
    } catch (Unsupported const& e) {
      report             = MembershipReport{};
      report.variety     = v;
      report.n           = n;
      report.verdict     = Verdict::unsupported;
      report.certificate = e.what();
    }
    report.millis = elapsed_ms(start);
    return report;
  }

  MembershipReport in_J_malcev_Burnside(FiniteMonoid const&      M,
                                        unsigned                 n,
                                        MembershipOptions const& options) {
    auto const       start = std::chrono::steady_clock::now();
    MembershipReport report;
    report.variety = Variety::J_malcev_Hn;
    report.n       = n;
    auto const P   = pair_monoid(M, n, options.pairs);
    if (!check_basis(M, j_basis(), P.fiber(), options.check, report)) {
      report.certificate = "fiber over 1 is not J-trivial: " + report.certificate;
    }
    report.millis = elapsed_ms(start);
    return report;
  }

  MembershipReport in_J_semidirect_Burnside(FiniteMonoid const&      M,
                                            unsigned                 n,
                                            MembershipOptions const& options) {
    auto const       start = std::chrono::steady_clock::now();
    MembershipReport report;
    report.variety = Variety::J_semidirect_Hn;
    report.n       = n;
    auto const P   = pair_monoid(M, n, options.pairs);

    // The check at h depends only on the fibers over h and h^-1, and only
    // through the products e m_x and m_t f.
    struct Entry {
      element_t product;  // e m_x or m_t f
      element_t e;        // (m_x m_y)^w or (m_z m_t)^w
      element_t m;        // m_x or m_t
      element_t via;      // m_y or m_z
    };
    auto collect = [&](std::vector<element_t> const& same, std::vector<element_t> const& inverse,
                       bool left) {
      std::vector<Entry>              out;
      std::unordered_set<std::uint64_t> seen;
      for (auto a : same) {
        for (auto b : inverse) {
          element_t const e = M.omega(M.product(a, b));
          element_t const m = left ? a : b;
          element_t const p = left ? M.product(e, a) : M.product(b, e);
          if (seen.insert((std::uint64_t{p} << 32U) | e).second) {
            out.push_back({p, e, m, left ? b : a});
          }
        }
      }
      return out;
    };
    std::set<std::pair<std::vector<element_t> const*, std::vector<element_t> const*>> done;
    std::map<std::vector<element_t>, std::vector<element_t> const*> canonical;
    auto intern = [&](std::vector<element_t> const& fiber) {
      return canonical.emplace(fiber, &fiber).first->second;
    };
    // Unlisted group elements have fiber {0} on both sides, where the
    // condition holds.
    std::uint64_t comparisons = 0;
    for (std::uint32_t h = 0; h < P.group_elements.size(); ++h) {
      auto const& same    = P.fiber_by_h[h];
      auto const& inverse = P.fiber_by_h[P.group_inverse[h]];
      if (!done.emplace(intern(same), intern(inverse)).second) {
        continue;
      }
      auto const xs = collect(same, inverse, true);
      auto const ts = collect(same, inverse, false);
      comparisons += static_cast<std::uint64_t>(xs.size()) * ts.size();
      if (comparisons > options.max_knast_pairs) {
        throw BudgetExceeded("semidirect decider exceeds " + std::to_string(options.max_knast_pairs)
                             + " comparisons");
      }
      for (auto const& x : xs) {
        for (auto const& t : ts) {
          element_t const lhs = M.product(x.product, t.product);
          element_t const rhs = M.product(x.e, t.e);
          if (lhs != rhs) {
            report.verdict   = Verdict::not_member;
            report.identity  = equation("(xy)^w x t (zt)^w", "(xy)^w (zt)^w");
            report.witness   = Substitution{"txyz", {t.m, x.m, x.via, t.via}};
            report.lhs_value = lhs;
            report.rhs_value = rhs;
            report.certificate
                = report.identity->to_string() + " fails at "
                  + report.witness->to_string(M) + " with x, z over the same group element g"
                  + " and y, t over g^-1: " + M.label(lhs) + " != " + M.label(rhs);
            report.millis = elapsed_ms(start);
            return report;
          }
        }
      }
    }
    report.millis = elapsed_ms(start);
    return report;
  }

  std::vector<MembershipReport> survey(FiniteMonoid const&      M,
                                       unsigned                 n,
                                       MembershipOptions const& options) {
    std::vector<MembershipReport> reports;
    for (auto v : all_varieties()) {
      reports.push_back(membership(M, v, n, options));
    }
    return reports;
  }

}  // namespace omegamon
