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

#ifndef OMEGAMON_TERM_HPP_
#define OMEGAMON_TERM_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "omegamon/monoid.hpp"

namespace omegamon {

  // Exponent of a power node: a positive integer k, or omega + k for any
  // integer k.
  struct Exponent {
    bool         omega = false;
    std::int64_t value = 1;

    static Exponent integer(std::int64_t k);
    static Exponent omega_plus(std::int64_t k) noexcept {
      return {true, k};
    }

    bool operator==(Exponent const&) const = default;
  };

  // An omega-term.  Nodes are the empty word 1, single-letter variables,
  // concatenations of at least two terms, and powers.
  class Term {
   public:
    enum class Kind : std::uint8_t { unit, variable, concat, power };

    static Term unit();
    static Term variable(char name);
    // Throws InvalidArgument for fewer than two factors.
    static Term concat(std::vector<Term> factors);
    static Term power(Term base, Exponent exponent);

    Kind kind() const noexcept {
      return _kind;
    }

    char name() const noexcept {
      return _name;
    }

    // Factors of a concat node, or the single base of a power node.
    std::vector<Term> const& children() const noexcept {
      return _children;
    }

    Term const& base() const noexcept {
      return _children.front();
    }

    Exponent exponent() const noexcept {
      return _exponent;
    }

    // Distinct variables, sorted.
    std::string variables() const;

    // Re-parses to an equal term.
    std::string to_string() const;

    bool operator==(Term const&) const = default;

   private:
    Term() = default;
    void collect_variables(std::string& out) const;
    void print(std::string& out) const;

    Kind              _kind = Kind::unit;
    char              _name = 0;
    std::vector<Term> _children;
    Exponent          _exponent;
  };

  // term   := factor+
  // factor := atom ('^' exp)*
  // atom   := letter | '1' | '(' term ')'
  // exp    := integer | 'w' | '(' 'w' [('+' | '-') integer] ')'
  // Whitespace is ignored.  'w' denotes omega only in exponent position.
  Term parse_term(std::string_view text);

  // A term compiled to a postfix program over a fixed variable order.
  class CompiledTerm {
   public:
    // `variables` must contain every variable of `term`.
    CompiledTerm(Term const& term, std::string_view variables);

    // values[i] is the element bound to variables[i].
    element_t evaluate(FiniteMonoid const&        M,
                       std::span<element_t const> values) const;

    // As above with caller-provided scratch space of at least
    // stack_depth() entries.
    element_t evaluate(FiniteMonoid const&        M,
                       std::span<element_t const> values,
                       std::span<element_t>       scratch) const;

    std::size_t stack_depth() const noexcept {
      return _depth;
    }

   private:
    enum class Op : std::uint8_t { unit, load, multiply, int_power, omega_power };
    struct Instruction {
      Op           op;
      std::int64_t arg;
    };

    void emit(Term const& term, std::string_view variables, std::size_t depth);

    std::vector<Instruction> _program;
    std::size_t              _depth = 0;
  };

  // Evaluate with `values[i]` bound to `variables[i]`.  Throws
  // InvalidArgument for an unbound variable.
  element_t evaluate(Term const&                term,
                     FiniteMonoid const&        M,
                     std::string_view           variables,
                     std::span<element_t const> values);

}  // namespace omegamon

#endif  // OMEGAMON_TERM_HPP_
