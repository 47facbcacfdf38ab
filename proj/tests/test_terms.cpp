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

#include "doctest.h"
#include "omegamon/corpus.hpp"
#include "omegamon/error.hpp"
#include "omegamon/identity.hpp"
#include "omegamon/monoid.hpp"
#include "omegamon/regex.hpp"
#include "omegamon/syntactic.hpp"
#include "omegamon/term.hpp"
#include "test_support.hpp"

using namespace omegamon;
using omegamon::testing::brute_index_period;
using omegamon::testing::slow_power;

namespace {

  // Tree-walking evaluator with omega powers found by scanning the power
  // sequence.
  element_t oracle_eval(Term const& t, FiniteMonoid const& M, std::map<char, element_t> const& sigma) {
    switch (t.kind()) {
      case Term::Kind::unit:
        return M.identity();
      case Term::Kind::variable:
        return sigma.at(t.name());
      case Term::Kind::concat: {
        element_t r = M.identity();
        for (auto const& c : t.children()) {
          r = M.product(r, oracle_eval(c, M, sigma));
        }
        return r;
      }
      case Term::Kind::power: {
        element_t const b = oracle_eval(t.base(), M, sigma);
        auto const      e = t.exponent();
        if (!e.omega) {
          return slow_power(M, b, static_cast<std::size_t>(e.value));
        }
        auto const [index, period] = brute_index_period(M, b);
        auto const p = static_cast<std::int64_t>(period);
        std::int64_t exp = static_cast<std::int64_t>(index);
        while (((exp - e.value) % p + p) % p != 0) {
          ++exp;
        }
        return slow_power(M, b, static_cast<std::size_t>(exp));
      }
    }
    return M.identity();
  }

  Term random_term(std::mt19937_64& rng, std::string_view vars, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 3);
    switch (pick(rng)) {
      case 0:
        return Term::variable(vars[rng() % vars.size()]);
      case 1:
        return Term::concat({random_term(rng, vars, depth - 1), random_term(rng, vars, depth - 1)});
      case 2:
        return Term::power(random_term(rng, vars, depth - 1),
                           Exponent::integer(1 + static_cast<std::int64_t>(rng() % 3)));
      default:
        return Term::power(random_term(rng, vars, depth - 1),
                           Exponent::omega_plus(static_cast<std::int64_t>(rng() % 5) - 2));
    }
  }

  std::vector<FiniteMonoid> sample_monoids() {
    auto out = transformation_corpus(25, 31);
    out.push_back(FiniteMonoid::cyclic_group(2));
    out.push_back(FiniteMonoid::monogenic(3, 4));
    out.push_back(FiniteMonoid::trivial());
    return out;
  }

}  // namespace

TEST_SUITE("terms") {
  TEST_CASE("parse (x y^w z)^(w+1)") {
    auto const t = parse_term("(x y^w z)^(w+1)");
    REQUIRE(t.kind() == Term::Kind::power);
    CHECK(t.exponent() == Exponent::omega_plus(1));
    auto const& body = t.base();
    REQUIRE(body.kind() == Term::Kind::concat);
    REQUIRE(body.children().size() == 3);
    CHECK(body.children()[0] == Term::variable('x'));
    CHECK(body.children()[1] == Term::power(Term::variable('y'), Exponent::omega_plus(0)));
    CHECK(body.children()[2] == Term::variable('z'));
    CHECK(t.variables() == "xyz");
  }

  TEST_CASE("parse exponents") {
    CHECK(parse_term("x^(w-1)") == Term::power(Term::variable('x'), Exponent::omega_plus(-1)));
    CHECK(parse_term("x^w") == Term::power(Term::variable('x'), Exponent::omega_plus(0)));
    CHECK(parse_term("x^3") == Term::power(Term::variable('x'), Exponent::integer(3)));
    CHECK(parse_term("1").kind() == Term::Kind::unit);
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_term("x^0"), ParseError);
    CHECK_THROWS_AS(parse_term(""), ParseError);
    CHECK_THROWS_AS(parse_term("(x"), ParseError);
    CHECK_THROWS_AS(parse_term("x^"), ParseError);
    CHECK_THROWS_AS(parse_term("x^(w+)"), ParseError);
    CHECK_THROWS_AS(parse_term("x)"), ParseError);
    CHECK_THROWS_AS(Exponent::integer(0), InvalidArgument);
    CHECK_THROWS_AS(Term::concat({Term::variable('x')}), InvalidArgument);
  }

  TEST_CASE("to_string re-parses to an equal term") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 300; ++i) {
      auto const t = random_term(rng, "xyz", 4);
      CHECK(parse_term(t.to_string()) == t);
    }
  }

  TEST_CASE("x^w on an idempotent") {
    auto const M = FiniteMonoid::monogenic(1, 1);
    std::vector<element_t> v{1};
    CHECK(evaluate(parse_term("x^w"), M, "x", v) == 1);
  }

  TEST_CASE("(x y^2 z)^(w+1) in C2 is xz") {
    auto const M = FiniteMonoid::cyclic_group(2);
    auto const t = parse_term("(x y^2 z)^(w+1)");
    for (element_t x = 0; x < 2; ++x) {
      for (element_t y = 0; y < 2; ++y) {
        for (element_t z = 0; z < 2; ++z) {
          std::vector<element_t> v{x, y, z};
          CHECK(evaluate(t, M, "xyz", v) == M.product(x, z));
        }
      }
    }
  }

  TEST_CASE("every term is 1 in the trivial monoid") {
    std::mt19937_64 rng(3);
    auto const      M = FiniteMonoid::trivial();
    std::vector<element_t> v{0, 0, 0};
    for (int i = 0; i < 50; ++i) {
      CHECK(evaluate(random_term(rng, "xyz", 4), M, "xyz", v) == 0);
    }
  }

  TEST_CASE("evaluate matches the tree-walking oracle") {
    std::mt19937_64 rng(4);
    for (auto const& M : sample_monoids()) {
      for (int i = 0; i < 20; ++i) {
        auto const t = random_term(rng, "xyz", 4);
        CompiledTerm const compiled(t, "xyz");
        std::vector<element_t> v(3);
        for (auto& e : v) {
          e = static_cast<element_t>(rng() % M.size());
        }
        std::map<char, element_t> sigma{{'x', v[0]}, {'y', v[1]}, {'z', v[2]}};
        CHECK(compiled.evaluate(M, v) == oracle_eval(t, M, sigma));
      }
    }
  }

  TEST_CASE("unbound variables are rejected") {
    auto const M = FiniteMonoid::cyclic_group(2);
    std::vector<element_t> v{1};
    CHECK_THROWS_AS(evaluate(parse_term("xy"), M, "x", v), InvalidArgument);
  }

  TEST_CASE("omega cross-checks with monoid-core") {
    for (auto const& M : sample_monoids()) {
      auto const w  = parse_term("x^w");
      auto const lr = parse_term("x^(w+1) x^(w-1)");
      for (element_t s = 0; s < M.size(); ++s) {
        std::vector<element_t> v{s};
        element_t const e = evaluate(w, M, "x", v);
        CHECK(M.is_idempotent(e));
        CHECK(evaluate(lr, M, "x", v) == e);
      }
    }
  }

  TEST_CASE("BG identity on commutative monoids") {
    auto const id = equation("(x^w y)^w", "(y x^w)^w");
    CHECK(check_identity(FiniteMonoid::cyclic_group(6), id).holds);
    CHECK(check_identity(FiniteMonoid::monogenic(3, 4), id).holds);
  }

  TEST_CASE("x^(w+1) = x^w fails on C2 at x = g") {
    auto const M = FiniteMonoid::cyclic_group(2);
    auto const r = check_identity(M, equation("x^(w+1)", "x^w"));
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->values == std::vector<element_t>{1});
    CHECK(r.witness->to_string(M) == "x=g");
  }

  TEST_CASE("(ux)^w = (xu)^w with u = yztytz fails on Synt((abcdbdc)*)") {
    auto const S  = syntactic_ordered_monoid(compile("(abcdbdc)*", "abcd"));
    auto const id = equation("(yztytzx)^w", "(xyztytz)^w");
    auto const r  = check_identity(S.monoid(), id);
    CHECK_FALSE(r.holds);
    // Variables in order t, x, y, z.
    std::vector<element_t> const letters{S.element_of("d"), S.element_of("a"), S.element_of("b"),
                                         S.element_of("c")};
    CHECK(evaluate(id.lhs, S.monoid(), "txyz", letters)
          != evaluate(id.rhs, S.monoid(), "txyz", letters));
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->values == letters);
  }

  TEST_CASE("inequality examples") {
    auto const C2 = OrderedMonoid::trivially_ordered(FiniteMonoid::cyclic_group(2));
    auto const r  = check_inequality(C2, inequality("1", "x"));
    CHECK_FALSE(r.holds);
    CHECK(r.witness->values == std::vector<element_t>{1});
    CHECK(check_inequality(C2, inequality("x", "x")).holds);
    auto const S = syntactic_ordered_monoid(compile("a*", "ab"));
    CHECK(check_inequality(S.ordered, inequality("x", "1")).holds);
    CHECK_FALSE(check_inequality(S.ordered, inequality("1", "x")).holds);
  }

  TEST_CASE("t = t always holds") {
    std::mt19937_64 rng(6);
    for (auto const& M : sample_monoids()) {
      auto const t = random_term(rng, "xy", 3);
      CHECK(check_identity(M, Pseudoidentity{t, t, Relation::equal}).holds);
    }
  }

  TEST_CASE("witness is the lexicographically first failure") {
    std::mt19937_64 rng(7);
    for (auto const& M : sample_monoids()) {
      if (M.size() > 40) {
        continue;
      }
      auto const id = equation("(xy)^w", "(yx)^w");
      auto const r  = check_identity(M, id);
      std::optional<std::vector<element_t>> first;
      for (element_t x = 0; x < M.size() && !first; ++x) {
        for (element_t y = 0; y < M.size() && !first; ++y) {
          std::map<char, element_t> sigma{{'x', x}, {'y', y}};
          if (oracle_eval(id.lhs, M, sigma) != oracle_eval(id.rhs, M, sigma)) {
            first = std::vector<element_t>{x, y};
          }
        }
      }
      CHECK(r.holds == !first.has_value());
      if (first) {
        CHECK(r.witness->values == *first);
      }
    }
  }

  TEST_CASE("sampling never finds a failure the exhaustive pass missed") {
    std::mt19937_64 rng(8);
    for (auto const& M : sample_monoids()) {
      auto const OM = OrderedMonoid::trivially_ordered(M);
      for (auto const& id : {equation("(x^w y)^w", "(y x^w)^w"), equation("x^(w+1)", "x^w"),
                             equation("(x y^w z)^(w+1)", "(x y^2 z)^(w+1)")}) {
        auto const exhaustive = check_identity(M, id);
        auto const sampled    = sample_failure(OM, id, 200, rng());
        if (exhaustive.holds) {
          CHECK_FALSE(sampled.has_value());
        }
      }
    }
  }

  TEST_CASE("evaluation commutes with transition-monoid quotients") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 15; ++i) {
      auto const d = random_dfa(rng, 5, "ab");
      std::vector<Transformation> gens;
      for (std::size_t letter = 0; letter < 2; ++letter) {
        std::vector<std::uint32_t> images(d.state_count());
        for (state_t q = 0; q < d.state_count(); ++q) {
          images[q] = d.next(q, letter);
        }
        gens.emplace_back(images);
      }
      auto const M = from_generators(gens, "ab");
      auto const S = syntactic_ordered_monoid(d);
      std::vector<element_t> phi(M.size());
      for (element_t m = 0; m < M.size(); ++m) {
        phi[m] = S.element_of(m == M.identity() ? "" : M.label(m));
      }
      for (int j = 0; j < 20; ++j) {
        auto const t = random_term(rng, "xy", 3);
        std::vector<element_t> v{static_cast<element_t>(rng() % M.size()),
                                 static_cast<element_t>(rng() % M.size())};
        std::vector<element_t> w{phi[v[0]], phi[v[1]]};
        CHECK(phi[evaluate(t, M, "xy", v)] == evaluate(t, S.monoid(), "xy", w));
      }
    }
  }

  TEST_CASE("substitution budget") {
    CHECK(substitution_count(1000, 3) == 1'000'000'000ULL);
    CHECK(substitution_count(1U << 20, 4) == UINT64_MAX);
    auto const M = FiniteMonoid::cyclic_group(10);
    CheckOptions small;
    small.max_substitutions = 100;
    CHECK_THROWS_AS(check_identity(M, equation("xyz", "zyx"), {}, small), BudgetExceeded);
    small.override_budget = true;
    CHECK(check_identity(M, equation("xyz", "zyx"), {}, small).holds);
  }

  TEST_CASE("pseudoidentity parse and print") {
    auto const e = parse_pseudoidentity("(x^w y)^w = (y x^w)^w");
    CHECK(e.relation == Relation::equal);
    CHECK(e.variables() == "xy");
    CHECK(parse_pseudoidentity(e.to_string()) == e);
    auto const i = parse_pseudoidentity("1 <= x^2");
    CHECK(i.relation == Relation::less_equal);
    CHECK(i.to_string() == "1 <= x^2");
    CHECK_THROWS_AS(parse_pseudoidentity("x y"), ParseError);
  }
}
