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

#include <map>
#include <random>
#include <unordered_set>

#include "doctest.h"
#include "omegamon/burnside.hpp"
#include "omegamon/corpus.hpp"
#include "omegamon/error.hpp"
#include "test_support.hpp"

using namespace omegamon;
using omegamon::testing::heisenberg_word;
using omegamon::testing::words_up_to;

TEST_SUITE("burnside") {
  TEST_CASE("sigma(xyzxzy, 2) is the identity") {
    BurnsideOracle const B("xyz", 2);
    CHECK(B.is_identity(B.sigma("xyzxzy")));
  }

  TEST_CASE("sigma((y^2 x)^2 (xy)^2 x^2, 3) is the identity") {
    BurnsideOracle const B("xy", 3);
    CHECK(B.is_identity(B.sigma("yyxyyxxyxyxx")));
  }

  TEST_CASE("generators are not the identity") {
    for (unsigned n : {2U, 3U}) {
      BurnsideOracle const B("xyz", n);
      for (char c : std::string("xyz")) {
        CHECK_FALSE(B.is_identity(B.sigma(std::string(1, c))));
      }
    }
  }

  TEST_CASE("exponent 1 is trivial") {
    BurnsideOracle const B("xy", 1);
    CHECK(B.order() == 1);
    CHECK(B.is_identity(B.sigma("xyx")));
    CHECK(B.enumerate().size() == 1);
  }

  TEST_CASE("enumerate sizes for n = 2") {
    CHECK(BurnsideOracle("x", 2).enumerate().size() == 2);
    CHECK(BurnsideOracle("xy", 2).enumerate().size() == 4);
    CHECK(BurnsideOracle("xyzt", 2).order() == 16);
  }

  TEST_CASE("B(2,3) has 27 elements and B(3,3) has 2187, all of exponent 3") {
    for (auto [gens, size] : {std::pair<char const*, std::size_t>{"xy", 27}, {"xyz", 2187}}) {
      BurnsideOracle const B(gens, 3);
      auto const           all = B.enumerate();
      CHECK(all.size() == size);
      CHECK(B.order() == size);
      std::unordered_set<BurnsideElement, BurnsideElementHash> distinct(all.begin(), all.end());
      CHECK(distinct.size() == all.size());
      for (auto const& a : all) {
        CHECK(B.is_identity(B.power(a, 3)));
      }
    }
  }

  TEST_CASE("enumerate enforces its cap") {
    BurnsideOracle const B("xyz", 3);
    CHECK_THROWS_AS(B.enumerate(100), BudgetExceeded);
  }

  TEST_CASE("B(2,3) agrees with the Heisenberg group mod 3") {
    BurnsideOracle const B("xy", 3);
    std::map<std::array<int, 3>, BurnsideElement> seen;
    std::size_t classes = 0;
    for (auto const& w : words_up_to("xy", 9)) {
      auto const h = heisenberg_word(w);
      auto const s = B.sigma(w);
      auto [it, inserted] = seen.emplace(h, s);
      if (inserted) {
        ++classes;
      } else {
        CHECK(it->second == s);
      }
    }
    // Injective: distinct matrices give distinct normal forms.
    std::unordered_set<BurnsideElement, BurnsideElementHash> images;
    for (auto const& [h, s] : seen) {
      images.insert(s);
    }
    CHECK(classes == 27);
    CHECK(images.size() == 27);
  }

  TEST_CASE("B(2,3) is not abelian") {
    BurnsideOracle const B("xy", 3);
    CHECK(B.multiply(B.sigma("x"), B.sigma("y")) != B.multiply(B.sigma("y"), B.sigma("x")));
  }

  TEST_CASE("sigma is a homomorphism and w^n = 1") {
    std::mt19937_64 rng(12);
    for (unsigned n : {1U, 2U, 3U}) {
      for (std::string gens : {"xy", "xyz", "abcd", "abcdef"}) {
        BurnsideOracle const B(gens, n);
        for (int i = 0; i < 60; ++i) {
          auto const u = random_word(rng, gens, rng() % 12);
          auto const v = random_word(rng, gens, rng() % 12);
          CHECK(B.sigma(u + v) == B.multiply(B.sigma(u), B.sigma(v)));
          std::string wn;
          for (unsigned r = 0; r < n; ++r) {
            wn += u;
          }
          CHECK(B.is_identity(B.sigma(wn)));
          CHECK(B.is_identity(B.multiply(B.sigma(u), B.inverse(B.sigma(u)))));
        }
      }
    }
  }

  TEST_CASE("multiplication is associative") {
    std::mt19937_64      rng(13);
    BurnsideOracle const B("abcde", 3);
    for (int i = 0; i < 200; ++i) {
      auto const a = B.sigma(random_word(rng, "abcde", 8));
      auto const b = B.sigma(random_word(rng, "abcde", 8));
      auto const c = B.sigma(random_word(rng, "abcde", 8));
      CHECK(B.multiply(B.multiply(a, b), c) == B.multiply(a, B.multiply(b, c)));
    }
  }

  TEST_CASE("n = 2: sigma(w) = 1 iff every letter occurs an even number of times") {
    BurnsideOracle const B("xyz", 2);
    for (auto const& w : words_up_to("xyz", 7)) {
      std::map<char, int> counts;
      for (char c : w) {
        ++counts[c];
      }
      bool even = true;
      for (auto [c, k] : counts) {
        even = even && k % 2 == 0;
      }
      CHECK(B.is_identity(B.sigma(w)) == even);
    }
    std::mt19937_64 rng(14);
    for (int i = 0; i < 100; ++i) {
      auto const a = B.sigma(random_word(rng, "xyz", 6));
      auto const b = B.sigma(random_word(rng, "xyz", 6));
      CHECK(B.multiply(a, b) == B.multiply(b, a));
    }
  }

  TEST_CASE("deleting a generator is a quotient map") {
    // Words over xyz with z erased land in B(2,3); equal images upstairs
    // stay equal downstairs.
    std::mt19937_64      rng(15);
    BurnsideOracle const big("xyz", 3);
    BurnsideOracle const small("xy", 3);
    auto erase = [](std::string w) {
      std::erase(w, 'z');
      return w;
    };
    for (int i = 0; i < 300; ++i) {
      auto const u = random_word(rng, "xyz", 10);
      auto const v = random_word(rng, "xyz", 10);
      if (big.sigma(u) == big.sigma(v)) {
        CHECK(small.sigma(erase(u)) == small.sigma(erase(v)));
      }
      CHECK(small.sigma(erase(u + v + u + v + u + v)) == small.identity());
    }
  }

  TEST_CASE("printing") {
    BurnsideOracle const B("xy", 3);
    CHECK(B.to_string(B.identity()) == "1");
    CHECK(B.to_string(B.sigma("x")) == "x");
  }

  TEST_CASE("unsupported exponents and bad generator lists") {
    CHECK_THROWS_AS(BurnsideOracle("xy", 4), Unsupported);
    CHECK_THROWS_AS(BurnsideOracle("xy", 0), Unsupported);
    CHECK_THROWS_AS(BurnsideOracle("xx", 2), InvalidArgument);
    BurnsideOracle const B("xy", 2);
    CHECK_THROWS_AS(B.sigma("xz"), InvalidArgument);
  }
}
