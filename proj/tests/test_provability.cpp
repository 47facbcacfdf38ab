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

#include <random>

#include "doctest.h"
#include "omegamon/corpus.hpp"
#include "omegamon/error.hpp"
#include "omegamon/provability.hpp"
#include "omegamon/pseudovariety.hpp"
#include "omegamon/syntactic.hpp"
#include "omegamon/words.hpp"
#include "test_support.hpp"

using namespace omegamon;
using omegamon::testing::forward_insertion_closure;
using omegamon::testing::words_up_to;

namespace {

  bool counts_agree_mod(std::string const& u, std::string const& v, unsigned n) {
    auto const a = letter_counts(u);
    auto const b = letter_counts(v);
    for (int c = 0; c < 256; ++c) {
      if (a.count[c] % n != b.count[c] % n) {
        return false;
      }
    }
    return true;
  }

  std::vector<FiniteMonoid> bg2_members() {
    std::vector<FiniteMonoid> out;
    CorpusOptions             options;
    options.max_elements = 40;
    for (auto& M : transformation_corpus(40, 3, options)) {
      if (membership(M, Variety::BGn_W, 2).member()) {
        out.push_back(std::move(M));
      }
    }
    std::mt19937_64 rng(4);
    for (int i = 0; i < 6; ++i) {
      auto S = syntactic_ordered_monoid(random_power_closed_language(rng, "ab", 2));
      if (S.monoid().size() <= 40) {
        out.push_back(S.monoid());
      }
    }
    out.push_back(FiniteMonoid::cyclic_group(2));
    return out;
  }

}  // namespace

TEST_SUITE("provability") {
  TEST_CASE("successors of the empty word") {
    CHECK(successors("", 2, 2, "ab") == std::vector<std::string>{"aa", "bb"});
  }

  TEST_CASE("successors of a") {
    CHECK(successors("a", 2, 3, "ab") == std::vector<std::string>{"aaa", "abb", "bba"});
  }

  TEST_CASE("successors preserve letter counts mod n") {
    std::mt19937_64 rng(1);
    for (unsigned n : {2U, 3U}) {
      for (int i = 0; i < 30; ++i) {
        auto const w = random_word(rng, "abc", rng() % 5);
        for (auto const& s : successors(w, n, w.size() + 2 * n, "abc")) {
          CHECK(counts_agree_mod(w, s, n));
          CHECK((s.size() - w.size()) % n == 0);
        }
      }
    }
  }

  TEST_CASE("provable_leq matches the forward insertion closure") {
    for (unsigned n : {2U, 3U}) {
      std::size_t const max_len = n == 2 ? 8 : 9;
      for (auto const& u : words_up_to("ab", 2)) {
        auto const closure = forward_insertion_closure(u, n, max_len, "ab");
        for (auto const& v : words_up_to("ab", max_len)) {
          auto const r = provable_leq(u, v, n);
          REQUIRE_MESSAGE(r.provable == (closure.count(v) == 1), u << " <= " << v);
          if (r.provable) {
            REQUIRE(r.proof.has_value());
            CHECK(r.proof->replay() == v);
            CHECK(r.proof->start == u);
            CHECK(r.proof->end == v);
          }
        }
      }
    }
  }

  TEST_CASE("1 <= w^2 in one step") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 50; ++i) {
      auto const w = random_word(rng, "abc", 1 + rng() % 6);
      auto const r = provable_leq("", w + w, 2);
      REQUIRE(r.provable);
      CHECK(r.proof->steps.size() == 1);
      CHECK(r.proof->replay() == w + w);
    }
  }

  TEST_CASE("1 <= abcacb is not provable") {
    auto const r = provable_leq("", "abcacb", 2);
    CHECK_FALSE(r.provable);
    CHECK_FALSE(r.proof.has_value());
    CHECK_FALSE(contains_power_factor("abcacb", 2));
  }

  TEST_CASE("a <= ab fails on letter counts") {
    auto const r = provable_leq("a", "ab", 2);
    CHECK_FALSE(r.provable);
    CHECK(r.explored == 0);
  }

  TEST_CASE("provability is transitive") {
    std::mt19937_64 rng(3);
    int             chains = 0;
    for (int i = 0; i < 200 && chains < 30; ++i) {
      auto const u  = random_word(rng, "ab", rng() % 3);
      auto const s1 = successors(u, 2, u.size() + 4, "ab");
      auto const v  = s1[rng() % s1.size()];
      auto const s2 = successors(v, 2, v.size() + 4, "ab");
      auto const w  = s2[rng() % s2.size()];
      CHECK(provable_leq(u, v, 2).provable);
      CHECK(provable_leq(v, w, 2).provable);
      CHECK(provable_leq(u, w, 2).provable);
      ++chains;
    }
  }

  TEST_CASE("replay rejects a bad step") {
    InsertionProof proof{"ab", {{5, "a"}}, "ab", 2};
    CHECK_THROWS_AS(proof.replay(), InvalidArgument);
  }

  TEST_CASE("node budget") {
    ProvabilityOptions options;
    options.max_nodes = 3;
    CHECK_THROWS_AS(provable_leq("", "aabbaabbaabbccaacc", 2, options), BudgetExceeded);
  }

  TEST_CASE("consequences of 1 <= aa hold on (BG)_2 members") {
    for (auto const& M : bg2_members()) {
      auto const r = check_consequences(M, "", "aa", 2);
      CHECK_MESSAGE(r.holds, r.item);
      CHECK_FALSE(r.checked_c);
    }
  }

  TEST_CASE("consequences of ab <= abbb on C2") {
    auto const r = check_consequences(FiniteMonoid::cyclic_group(2), "ab", "abbb", 2);
    CHECK(r.holds);
  }

  TEST_CASE("u <= u also checks (c)") {
    auto const r = check_consequences(FiniteMonoid::cyclic_group(3), "ab", "ab", 2);
    CHECK(r.holds);
    CHECK(r.checked_c);
    auto const equations = consequence_equations("ab", "ab", true);
    REQUIRE(equations.size() == 5);
    CHECK(equations.back().first == "c");
    CHECK(consequence_equations("ab", "ab", false).size() == 4);
  }

  TEST_CASE("consequence battery on random provable pairs") {
    auto const      members = bg2_members();
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
      std::string u = random_word(rng, "ab", rng() % 3);
      std::string v = u;
      for (int k = 0; k < 2; ++k) {
        auto const next = successors(v, 2, v.size() + 4, "ab");
        v = next[rng() % next.size()];
      }
      REQUIRE(provable_leq(u, v, 2).provable);
      for (auto const& M : members) {
        auto const r = check_consequences(M, u, v, 2);
        CHECK_MESSAGE(r.holds, u << " <= " << v << " item " << r.item);
      }
    }
  }

  TEST_CASE("consequences can fail outside (BG)_2") {
    // In C3 at a = g: (aa)^(w+1) = g^2 but (aa)^w = 1.
    auto const r = check_consequences(FiniteMonoid::cyclic_group(3), "", "aa", 2);
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness.has_value());
  }
}
