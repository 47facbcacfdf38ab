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

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "omegamon/burnside.hpp"
#include "omegamon/corpus.hpp"
#include "omegamon/error.hpp"
#include "omegamon/green.hpp"
#include "omegamon/identity.hpp"
#include "omegamon/languages.hpp"
#include "omegamon/presentation.hpp"
#include "omegamon/pseudovariety.hpp"
#include "omegamon/regex.hpp"
#include "omegamon/syntactic.hpp"
#include "test_support.hpp"

using namespace omegamon;

namespace {

  bool member(FiniteMonoid const& M, Variety v, unsigned n) {
    auto const r = membership(M, v, n);
    REQUIRE_MESSAGE((r.verdict == Verdict::member || r.verdict == Verdict::not_member),
                    variety_name(v) << ": " << r.certificate);
    return r.member();
  }

  std::vector<FiniteMonoid> tiny_monoids() {
    CorpusOptions options;
    options.max_degree     = 3;
    options.max_generators = 2;
    options.max_elements   = 8;
    auto out = transformation_corpus(40, 77, options);
    out.push_back(FiniteMonoid::cyclic_group(2));
    out.push_back(FiniteMonoid::cyclic_group(3));
    out.push_back(FiniteMonoid::cyclic_group(4));
    out.push_back(FiniteMonoid::monogenic(2, 2));
    out.push_back(FiniteMonoid::trivial());
    return out;
  }

  // Monoids from several sources, most of them small enough for
  // three-variable checks.
  std::vector<FiniteMonoid> mixed_corpus() {
    CorpusOptions options;
    options.max_elements = 60;
    auto out    = transformation_corpus(60, 5, options);
    auto groups = group_corpus(10, 6, options);
    out.insert(out.end(), groups.begin(), groups.end());
    std::mt19937_64 rng(7);
    for (unsigned n : {2U, 3U}) {
      for (int i = 0; i < 8; ++i) {
        auto S = syntactic_ordered_monoid(random_power_closed_language(rng, "ab", n));
        if (S.monoid().size() <= 60) {
          out.push_back(S.monoid());
        }
      }
    }
    out.push_back(syntactic_ordered_monoid(compile("(abcdbdc)*", "abcd")).monoid());
    return out;
  }

  std::string letters(std::size_t k) {
    return std::string("abcdefgh").substr(0, k);
  }

  // The Knast condition by a direct quadruple loop over all pairs with a
  // listed group component.
  bool naive_knast(FiniteMonoid const& M, PairMonoid P) {
    if (P.zero) {
      for (std::uint32_t g = 0; g < P.group_elements.size(); ++g) {
        P.m.push_back(*P.zero);
        P.h.push_back(g);
      }
    }
    auto const inv = P.group_inverse;
    for (std::size_t x = 0; x < P.size(); ++x) {
      for (std::size_t y = 0; y < P.size(); ++y) {
        if (P.h[y] != inv[P.h[x]]) {
          continue;
        }
        for (std::size_t z = 0; z < P.size(); ++z) {
          if (P.h[z] != P.h[x]) {
            continue;
          }
          for (std::size_t t = 0; t < P.size(); ++t) {
            if (P.h[t] != inv[P.h[z]]) {
              continue;
            }
            element_t const e = M.omega(M.product(P.m[x], P.m[y]));
            element_t const f = M.omega(M.product(P.m[z], P.m[t]));
            element_t const lhs =
                M.product(M.product(e, M.product(P.m[x], P.m[t])), f);
            if (lhs != M.product(e, f)) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

}  // namespace

TEST_SUITE("pseudovar") {
  TEST_CASE("the trivial monoid belongs to every variety") {
    for (auto const& r : survey(FiniteMonoid::trivial(), 2)) {
      CHECK_MESSAGE(r.member(), variety_name(r.variety));
    }
  }

  TEST_CASE("variety names round trip") {
    for (auto v : all_varieties()) {
      CHECK(parse_variety(variety_name(v)) == v);
    }
    CHECK(parse_variety("BGn") == Variety::BGn_W);
    CHECK_FALSE(parse_variety("DA").has_value());
  }

  TEST_CASE("pair monoid fibers") {
    auto const C2 = pair_monoid(FiniteMonoid::cyclic_group(2), 2);
    CHECK(C2.fiber() == std::vector<element_t>{0});
    auto const C3 = pair_monoid(FiniteMonoid::cyclic_group(3), 2);
    CHECK(C3.fiber() == std::vector<element_t>{0, 1, 2});
    auto const T = pair_monoid(FiniteMonoid::trivial(), 3);
    CHECK(T.fiber() == std::vector<element_t>{0});
    CHECK_THROWS_AS(pair_monoid(FiniteMonoid::cyclic_group(2), 4), Unsupported);
  }

  TEST_CASE("pair monoid agrees with word enumeration") {
    for (auto const& M : tiny_monoids()) {
      for (unsigned n : {2U, 3U}) {
        auto const P = pair_monoid(M, n);
        if (P.size() > 12 || M.generators().empty()) {
          continue;
        }
        std::string const    gens = letters(M.generators().size());
        BurnsideOracle const B(gens, n);
        std::set<std::pair<element_t, std::vector<std::uint8_t>>> seen;
        std::set<element_t> fiber;
        for (auto const& w : omegamon::testing::words_up_to(gens, P.size())) {
          std::vector<std::size_t> positions;
          for (char c : w) {
            positions.push_back(static_cast<std::size_t>(c - 'a'));
          }
          element_t const m = M.evaluate(positions);
          auto const      h = B.sigma(w);
          seen.emplace(m, h.exponents);
          if (B.is_identity(h)) {
            fiber.insert(m);
          }
        }
        // Pairs over the zero are implicit in P.
        std::size_t listed = 0;
        bool        zero   = false;
        for (auto const& [m, h] : seen) {
          zero = zero || m == P.zero;
          listed += m != P.zero;
        }
        CHECK(zero == P.zero.has_value());
        CHECK(listed == P.size());
        for (std::size_t i = 0; i < P.size(); ++i) {
          CHECK(seen.count({P.m[i], P.group_elements[P.h[i]].exponents}) == 1);
        }
        if (P.zero) {
          fiber.insert(*P.zero);
        }
        CHECK(std::vector<element_t>(fiber.begin(), fiber.end()) == P.fiber());
      }
    }
  }

  TEST_CASE("the fiber is a submonoid containing every n-th power") {
    for (auto const& M : mixed_corpus()) {
      for (unsigned n : {2U, 3U}) {
        PairMonoidLimits limits;
        limits.max_pairs = 200'000;
        PairMonoid P;
        try {
          P = pair_monoid(M, n, limits);
        } catch (BudgetExceeded const&) {
          continue;
        }
        std::set<element_t> const S(P.fiber().begin(), P.fiber().end());
        CHECK(S.count(M.identity()) == 1);
        for (element_t s = 0; s < M.size(); ++s) {
          CHECK(S.count(M.power(s, n)) == 1);
        }
        for (auto a : S) {
          for (auto b : S) {
            CHECK(S.count(M.product(a, b)) == 1);
          }
        }
      }
    }
  }

  TEST_CASE("the Knast decider agrees with a direct quadruple loop") {
    int compared = 0;
    for (auto const& M : tiny_monoids()) {
      for (unsigned n : {2U, 3U}) {
        auto const P = pair_monoid(M, n);
        if (P.size() + P.group_elements.size() > 40) {
          continue;
        }
        auto const r = in_J_semidirect_Burnside(M, n);
        CHECK(r.member() == naive_knast(M, P));
        ++compared;
      }
    }
    CHECK(compared > 20);
  }

  TEST_CASE("the Mal'cev decider checks the J identities on the fiber") {
    for (auto const& M : tiny_monoids()) {
      for (unsigned n : {2U, 3U}) {
        auto const P        = pair_monoid(M, n);
        bool       expected = true;
        for (auto s : P.fiber()) {
          expected = expected && M.omega_power(s, 1) == M.omega(s);
          for (auto t : P.fiber()) {
            expected = expected && M.omega(M.product(s, t)) == M.omega(M.product(t, s));
          }
        }
        auto const r = in_J_malcev_Burnside(M, n);
        CHECK(r.member() == expected);
        if (!r.member()) {
          REQUIRE(r.witness.has_value());
          for (auto value : r.witness->values) {
            CHECK(std::binary_search(P.fiber().begin(), P.fiber().end(), value));
          }
        }
      }
    }
  }

  TEST_CASE("C3 is not in the Mal'cev product at n = 2") {
    auto const M = FiniteMonoid::cyclic_group(3);
    auto const r = in_J_malcev_Burnside(M, 2);
    CHECK_FALSE(r.member());
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->to_string(M) == "x=g");
  }

  TEST_CASE("groups of exponent dividing n are in both products") {
    for (auto [k, n] : {std::pair{2U, 2U}, {3U, 3U}, {1U, 2U}}) {
      auto const M = FiniteMonoid::cyclic_group(k);
      CHECK(member(M, Variety::Gn, n));
      CHECK(in_J_malcev_Burnside(M, n).member());
      CHECK(in_J_semidirect_Burnside(M, n).member());
    }
  }

  TEST_CASE("product deciders are unsupported for n = 5") {
    auto const r = membership(FiniteMonoid::cyclic_group(3), Variety::J_semidirect_Hn, 5);
    CHECK(r.verdict == Verdict::unsupported);
    CHECK(membership(FiniteMonoid::cyclic_group(5), Variety::BGn_W, 5).verdict
          == Verdict::member);
  }

  TEST_CASE("the three bases of (BG)_n agree") {
    for (auto const& M : mixed_corpus()) {
      for (unsigned n : {2U, 3U}) {
        bool const u = member(M, Variety::BGn_U, n);
        CHECK(member(M, Variety::BGn_V, n) == u);
        CHECK(member(M, Variety::BGn_W, n) == u);
      }
    }
  }

  TEST_CASE("the BG identity matches one idempotent per R- and L-class") {
    for (auto const& M : mixed_corpus()) {
      auto const G = green_data(M);
      CHECK(member(M, Variety::BG, 0) == G.at_most_one_idempotent_per_r_and_l_class());
    }
  }

  TEST_CASE("J matches the J identities") {
    for (auto const& M : mixed_corpus()) {
      bool const by_identity = check_identity(M, equation("x^(w+1)", "x^w")).holds
                               && check_identity(M, equation("(xy)^w", "(yx)^w")).holds;
      CHECK(member(M, Variety::J, 0) == by_identity);
      CHECK(member(M, Variety::J, 0) == green_data(M).is_j_trivial());
    }
  }

  TEST_CASE("identities satisfied by BG") {
    std::vector<Pseudoidentity> const ids{
        equation("(x y^(w+1))^w", "y^(w-1) (y^(w+1) x)^w y^(w+1)"),
        equation("(x y^w z)^w (x z)^(w+1)", "(x y^w z)^(w+1)"),
        equation("(x y^w z)^(w+1)", "(x z)^(w+1) (x y^w z)^w"),
        equation("(x y^w z)^w (x z)^w", "(x y^w z)^w"),
        equation("(x y^w z)^w", "(x z)^w (x y^w z)^w"),
    };
    auto const four = equation("(x y^w z)^w (x t^w z)^w", "(x y^w z)^(w+1) (x t^w z)^(w-1)");
    int checked = 0;
    for (auto const& M : mixed_corpus()) {
      if (!member(M, Variety::BG, 0)) {
        continue;
      }
      ++checked;
      for (auto const& id : ids) {
        CHECK_MESSAGE(check_identity(M, id).holds, id.to_string());
      }
      if (M.size() <= 30) {
        CHECK(check_identity(M, four).holds);
      }
    }
    CHECK(checked > 10);
  }

  TEST_CASE("identities satisfied by (BG)_n") {
    int checked = 0;
    for (unsigned n : {2U, 3U}) {
      std::string const yn = "y^" + std::to_string(n);
      std::vector<Pseudoidentity> const ids{
          equation("(x " + yn + " z)^(w+1)", "(x z)^(w+1) (x " + yn + " z)^w"),
          equation("(x " + yn + " z)^(w+1)", "(x " + yn + " z)^w (x z)^(w+1)"),
          equation("(x " + yn + " z)^w", "(x z)^w (x " + yn + " z)^w"),
          equation("(x " + yn + " z)^w", "(x " + yn + " z)^w (x z)^w"),
      };
      for (auto const& M : mixed_corpus()) {
        if (!member(M, Variety::BGn_W, n)) {
          continue;
        }
        ++checked;
        for (auto const& id : ids) {
          CHECK_MESSAGE(check_identity(M, id).holds, id.to_string());
        }
      }
    }
    CHECK(checked > 10);
  }

  TEST_CASE("inclusions between the varieties") {
    for (auto const& M : mixed_corpus()) {
      for (unsigned n : {2U, 3U}) {
        auto const row = survey(M, n);
        auto verdict = [&](Variety v) {
          return row[static_cast<std::size_t>(v)].verdict;
        };
        auto is = [&](Variety v) {
          return verdict(v) == Verdict::member;
        };
        auto is_not = [&](Variety v) {
          return verdict(v) == Verdict::not_member;
        };
        if (is(Variety::J)) {
          CHECK(is(Variety::BGn_W));
          CHECK(!is_not(Variety::J_malcev_Hn));
        }
        if (is(Variety::Gn)) {
          CHECK(!is_not(Variety::J_malcev_Hn));
        }
        if (is(Variety::J_malcev_Hn)) {
          CHECK(is(Variety::BGn_W));
        }
        if (is(Variety::J_semidirect_Hn)) {
          CHECK(!is_not(Variety::J_malcev_Hn));
        }
        if (is(Variety::BGn_W)) {
          CHECK(is(Variety::EJn));
          CHECK(is(Variety::BG));
        }
      }
    }
  }

  TEST_CASE("negative verdicts carry re-checkable certificates") {
    for (auto const& M : mixed_corpus()) {
      for (auto const& r : survey(M, 2)) {
        if (r.verdict != Verdict::not_member) {
          continue;
        }
        CHECK_FALSE(r.certificate.empty());
        if (r.identity && r.witness) {
          auto const& id = *r.identity;
          element_t const lhs = evaluate(id.lhs, M, r.witness->variables, r.witness->values);
          element_t const rhs = evaluate(id.rhs, M, r.witness->variables, r.witness->values);
          CHECK(lhs == r.lhs_value);
          CHECK(rhs == r.rhs_value);
          CHECK(lhs != rhs);
        }
      }
    }
  }

  TEST_CASE("separations by ex0 and ex1 at n = 2") {
    auto const ex0 = enumerate_presentation(builder_monoid_0(2)).monoid;
    auto const ex1 = enumerate_presentation(builder_monoid_1(2)).monoid;
    CHECK(member(ex0, Variety::BHn, 2));
    CHECK_FALSE(member(ex0, Variety::EJn, 2));
    CHECK(member(ex1, Variety::EJn, 2));
    CHECK_FALSE(member(ex1, Variety::BGn_W, 2));
  }

  TEST_CASE("Synt(L2) is in (BG)_2 but in neither product") {
    auto const S = syntactic_ordered_monoid(lang_L2());
    CHECK(member(S.monoid(), Variety::BGn_W, 2));
    CHECK_FALSE(in_J_malcev_Burnside(S.monoid(), 2).member());
    CHECK_FALSE(in_J_semidirect_Burnside(S.monoid(), 2).member());
  }

  TEST_CASE("budget overruns become verdicts") {
    MembershipOptions options;
    options.check.max_substitutions = 10;
    auto const r = membership(FiniteMonoid::cyclic_group(6), Variety::BGn_W, 2, options);
    CHECK(r.verdict == Verdict::budget_exceeded);
  }
}
