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
#include <set>

#include "doctest.h"
#include "omegamon/error.hpp"
#include "omegamon/green.hpp"
#include "omegamon/presentation.hpp"
#include "omegamon/rewriting.hpp"
#include "omegamon/words.hpp"

using namespace omegamon;

namespace {

  bool has_relation(Presentation const& p, std::string const& l, std::string const& r) {
    for (auto const& [a, b] : p.relations) {
      if (a == l && b == r) {
        return true;
      }
    }
    return false;
  }

  bool has_zero_rule(Presentation const& p, std::string const& w) {
    return std::find(p.zero_rules.begin(), p.zero_rules.end(), w) != p.zero_rules.end();
  }

  std::string aiba(unsigned i, unsigned j) {
    return repeat("a", i) + "b" + repeat("a", j);
  }

}  // namespace

TEST_SUITE("presentations") {
  TEST_CASE("<a : aa = a> has two elements") {
    Presentation p;
    p.generators = "a";
    p.relations  = {{"aa", "a"}};
    auto const P = enumerate_presentation(p);
    CHECK(P.monoid.size() == 2);
    CHECK(P.element_of("aaaa") == P.element_of("a"));
    CHECK_FALSE(P.zero.has_value());
  }

  TEST_CASE("builder relations for n = 2") {
    auto const one = builder_monoid_1(2);
    CHECK(has_relation(one, "aabaa", "aa"));
    CHECK(has_relation(one, "baab", "b"));
    CHECK(has_zero_rule(one, "bab"));
    CHECK(has_zero_rule(one, "bb"));
    CHECK(has_zero_rule(one, "aaa"));
    auto const zero = builder_monoid_0(2);
    CHECK(has_relation(zero, "aabbaa", "aa"));
    CHECK(has_relation(zero, "bbaabb", "bb"));
    CHECK(has_zero_rule(zero, "aba"));
    CHECK(has_zero_rule(zero, "bab"));
    CHECK(has_zero_rule(zero, "aaa"));
    CHECK(has_zero_rule(zero, "bbb"));
    CHECK_THROWS_AS(builder_monoid_0(1), InvalidArgument);
    CHECK_THROWS_AS(builder_monoid_1(1), InvalidArgument);
  }

  TEST_CASE("presentation ex1 at n = 2 has the listed elements") {
    auto const P = enumerate_presentation(builder_monoid_1(2));
    std::set<element_t> listed{P.element_of(""), P.element_of("a"), *P.zero};
    for (unsigned i = 0; i <= 2; ++i) {
      for (unsigned j = 0; j <= 2; ++j) {
        listed.insert(P.element_of(aiba(i, j)));
      }
    }
    CHECK(P.element_of("aa") == P.element_of("aabaa"));
    CHECK(listed.size() == P.monoid.size());
    CHECK(P.monoid.size() == 12);
  }

  TEST_CASE("presentation ex1: idempotents a^i b a^j with i + j = n") {
    for (unsigned n : {2U, 3U}) {
      auto const P = enumerate_presentation(builder_monoid_1(n));
      std::set<element_t> expected;
      for (unsigned i = 0; i <= n; ++i) {
        expected.insert(P.element_of(aiba(i, n - i)));
      }
      std::set<element_t> found;
      for (auto e : P.monoid.idempotents()) {
        if (e != P.monoid.identity() && e != *P.zero) {
          found.insert(e);
        }
      }
      CHECK(found == expected);
      auto const an_b = P.element_of(repeat("a", n) + "b");
      auto const b_an = P.element_of("b" + repeat("a", n));
      CHECK(an_b != b_an);
      CHECK(P.monoid.is_idempotent(an_b));
      CHECK(P.monoid.is_idempotent(b_an));
    }
  }

  TEST_CASE("presentation ex1: n-th powers generate a J-trivial submonoid") {
    for (unsigned n : {2U, 3U}) {
      auto const&            M = enumerate_presentation(builder_monoid_1(n)).monoid;
      std::vector<element_t> powers;
      for (element_t s = 0; s < M.size(); ++s) {
        powers.push_back(M.power(s, n));
      }
      auto const sub = submonoid(M, powers);
      CHECK(green_data(sub.monoid).is_j_trivial());
    }
  }

  TEST_CASE("presentation ex0: idempotents and three regular J-classes") {
    for (unsigned n : {2U, 3U}) {
      auto const  P = enumerate_presentation(builder_monoid_0(n));
      auto const& M = P.monoid;
      CHECK(green_data(M).regular_j_class_count() == 3);
      auto const idem = M.idempotents();
      for (auto e : idem) {
        for (auto f : idem) {
          if (e != f && e != M.identity() && f != M.identity()) {
            CHECK(M.product(e, f) == *P.zero);
          }
        }
      }
      auto const anbn = P.element_of(repeat("a", n) + repeat("b", n));
      auto const bnan = P.element_of(repeat("b", n) + repeat("a", n));
      CHECK(M.omega(anbn) == anbn);
      CHECK(anbn != bnan);
    }
  }

  TEST_CASE("enumerated tables satisfy their relations") {
    for (unsigned n : {2U, 3U, 4U}) {
      for (auto const& p : {builder_monoid_0(n), builder_monoid_1(n)}) {
        auto const P = enumerate_presentation(p);
        CHECK(is_associative(P.monoid));
        for (auto const& [l, r] : p.relations) {
          CHECK(P.element_of(l) == P.element_of(r));
        }
        for (auto const& w : p.zero_rules) {
          CHECK(P.element_of(w) == *P.zero);
        }
        for (element_t s = 0; s < P.monoid.size(); ++s) {
          CHECK(P.monoid.product(s, *P.zero) == *P.zero);
          CHECK(P.element_of(P.normal_forms[s]) == s);
          CHECK_FALSE(P.rewriting.is_reducible(P.normal_forms[s]));
        }
      }
    }
  }

  TEST_CASE("the free monoid on one letter is undecided") {
    Presentation p;
    p.generators = "a";
    PresentationLimits limits;
    limits.max_elements = 50;
    CHECK_THROWS_AS(enumerate_presentation(p, limits), Undecided);
  }

  TEST_CASE("presentation text round trip") {
    for (auto const& p : {builder_monoid_0(3), builder_monoid_1(2)}) {
      auto const q = from_presentation_text(to_presentation_text(p));
      CHECK(q.generators == p.generators);
      CHECK(q.relations == p.relations);
      CHECK(q.zero_rules == p.zero_rules);
      CHECK(q.has_zero == p.has_zero);
    }
    auto const parsed = from_presentation_text("# comment\ngens ab\nrel ab = 1\nzero\n");
    CHECK(parsed.relations.size() == 1);
    CHECK(parsed.relations[0].second.empty());
    CHECK(parsed.has_zero);
    CHECK_THROWS_AS(from_presentation_text("gens ab\nrel ac = a\n"), InvalidArgument);
    CHECK_THROWS_AS(from_presentation_text("gens ab\nfrob\n"), InvalidArgument);
    CHECK_THROWS_AS(load_presentation_file("/nonexistent/p.txt"), InvalidArgument);
  }

  TEST_CASE("shortlex order and rewriting") {
    ShortlexOrder const order("0ab");
    CHECK(order.less("b", "aa"));
    CHECK(order.less("0", "a"));
    CHECK(order.less("ab", "ba"));
    CHECK_FALSE(order.less("ab", "ab"));
    // <a, b : ab = ba> is the free commutative monoid.
    RewritingSystem const rs(ShortlexOrder("ab"), {{"ba", "ab"}});
    CHECK(rs.reduce("babab") == "aabbb");
    CHECK(rs.reduce(rs.reduce("bbaa")) == rs.reduce("bbaa"));
    CompletionLimits tight;
    tight.max_rules = 2;
    CHECK_THROWS_AS(RewritingSystem(ShortlexOrder("abc"), {{"aba", "bab"}, {"cac", "aca"}}, tight),
                    Undecided);
  }
}
