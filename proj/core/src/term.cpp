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

#include "omegamon/term.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "omegamon/error.hpp"

namespace omegamon {

  Exponent Exponent::integer(std::int64_t k) {
    if (k < 1) {
      throw InvalidArgument("integer exponents must be at least 1, found "
                            + std::to_string(k));
    }
    return {false, k};
  }

  Term Term::unit() {
    return Term();
  }

  Term Term::variable(char name) {
    if (std::isalpha(static_cast<unsigned char>(name)) == 0) {
      throw InvalidArgument(std::string("variable names are letters, found '") + name
                            + "'");
    }
    Term t;
    t._kind = Kind::variable;
    t._name = name;
    return t;
  }

  Term Term::concat(std::vector<Term> factors) {
    if (factors.size() < 2) {
      throw InvalidArgument("a concatenation needs at least two factors");
    }
    Term t;
    t._kind     = Kind::concat;
    t._children = std::move(factors);
    return t;
  }

  Term Term::power(Term base, Exponent exponent) {
    if (!exponent.omega && exponent.value < 1) {
      throw InvalidArgument("integer exponents must be at least 1");
    }
    Term t;
    t._kind = Kind::power;
    t._children.push_back(std::move(base));
    t._exponent = exponent;
    return t;
  }

  void Term::collect_variables(std::string& out) const {
    if (_kind == Kind::variable) {
      out.push_back(_name);
    }
    for (auto const& c : _children) {
      c.collect_variables(out);
    }
  }

  std::string Term::variables() const {
    std::string out;
    collect_variables(out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  void Term::print(std::string& out) const {
    switch (_kind) {
      case Kind::unit:
        out.push_back('1');
        break;
      case Kind::variable:
        out.push_back(_name);
        break;
      case Kind::concat:
        for (auto const& c : _children) {
          if (c._kind == Kind::concat) {
            out.push_back('(');
            c.print(out);
            out.push_back(')');
          } else {
            c.print(out);
          }
        }
        break;
      case Kind::power: {
        bool const wrap = base()._kind == Kind::concat || base()._kind == Kind::power;
        if (wrap) {
          out.push_back('(');
        }
        base().print(out);
        if (wrap) {
          out.push_back(')');
        }
        out.push_back('^');
        if (!_exponent.omega) {
          out += std::to_string(_exponent.value);
        } else if (_exponent.value == 0) {
          out.push_back('w');
        } else {
          out += _exponent.value > 0 ? "(w+" : "(w-";
          std::uint64_t const magnitude
              = _exponent.value > 0 ? static_cast<std::uint64_t>(_exponent.value)
                                    : 0 - static_cast<std::uint64_t>(_exponent.value);
          out += std::to_string(magnitude);
          out.push_back(')');
        }
        break;
      }
    }
  }

  std::string Term::to_string() const {
    std::string out;
    print(out);
    return out;
  }

  namespace {

    class TermParser {
     public:
      explicit TermParser(std::string_view text) : _text(text) {}

      Term parse() {
        Term t = term();
        skip();
        if (_pos != _text.size()) {
          fail("unexpected character '" + std::string(1, _text[_pos]) + "'");
        }
        return t;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(what, _pos);
      }

      void skip() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos])) != 0) {
          ++_pos;
        }
      }

      char peek() {
        skip();
        return _pos < _text.size() ? _text[_pos] : '\0';
      }

      static bool starts_atom(char c) {
        return c == '(' || c == '1' || std::isalpha(static_cast<unsigned char>(c)) != 0;
      }

      Term term() {
        std::vector<Term> factors;
        while (starts_atom(peek())) {
          factors.push_back(factor());
        }
        if (factors.empty()) {
          fail(_pos == _text.size() ? "unexpected end of term" : "expected a term");
        }
        if (factors.size() == 1) {
          return std::move(factors.front());
        }
        return Term::concat(std::move(factors));
      }

      Term factor() {
        Term t = atom();
        while (peek() == '^') {
          ++_pos;
          t = Term::power(std::move(t), exponent());
        }
        return t;
      }

      Term atom() {
        char const c = peek();
        if (c == '(') {
          ++_pos;
          Term t = term();
          if (peek() != ')') {
            fail("expected ')'");
          }
          ++_pos;
          return t;
        }
        ++_pos;
        if (c == '1') {
          return Term::unit();
        }
        return Term::variable(c);
      }

      std::int64_t integer() {
        skip();
        std::size_t const start = _pos;
        while (_pos < _text.size()
               && std::isdigit(static_cast<unsigned char>(_text[_pos])) != 0) {
          ++_pos;
        }
        if (start == _pos) {
          fail("expected an integer");
        }
        std::int64_t value = 0;
        auto const [ptr, ec]
            = std::from_chars(_text.data() + start, _text.data() + _pos, value);
        if (ec != std::errc()) {
          _pos = start;
          fail("integer out of range");
        }
        return value;
      }

      Exponent exponent() {
        char const c = peek();
        if (c == 'w') {
          ++_pos;
          return Exponent::omega_plus(0);
        }
        if (c == '(') {
          ++_pos;
          if (peek() != 'w') {
            fail("expected 'w' in parenthesised exponent");
          }
          ++_pos;
          std::int64_t k    = 0;
          char const   sign = peek();
          if (sign == '+' || sign == '-') {
            ++_pos;
            k = integer();
            if (sign == '-') {
              k = -k;
            }
          }
          if (peek() != ')') {
            fail("expected ')'");
          }
          ++_pos;
          return Exponent::omega_plus(k);
        }
        std::size_t const start = _pos;
        std::int64_t const k    = integer();
        if (k < 1) {
          _pos = start;
          fail("exponent must be at least 1");
        }
        return Exponent::integer(k);
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };

  }  // namespace

  Term parse_term(std::string_view text) {
    return TermParser(text).parse();
  }

  CompiledTerm::CompiledTerm(Term const& term, std::string_view variables) {
    emit(term, variables, 0);
  }

  void CompiledTerm::emit(Term const& term, std::string_view variables, std::size_t depth) {
    _depth = std::max(_depth, depth + 1);
    switch (term.kind()) {
      case Term::Kind::unit:
        _program.push_back({Op::unit, 0});
        break;
      case Term::Kind::variable: {
        auto const i = variables.find(term.name());
        if (i == std::string_view::npos) {
          throw InvalidArgument(std::string("unbound variable '") + term.name() + "'");
        }
        _program.push_back({Op::load, static_cast<std::int64_t>(i)});
        break;
      }
      case Term::Kind::concat: {
        // Left fold: keep at most two live values per level.
        auto const& factors = term.children();
        emit(factors[0], variables, depth);
        for (std::size_t i = 1; i < factors.size(); ++i) {
          emit(factors[i], variables, depth + 1);
          _program.push_back({Op::multiply, 0});
        }
        break;
      }
      case Term::Kind::power: {
        emit(term.base(), variables, depth);
        auto const e = term.exponent();
        _program.push_back({e.omega ? Op::omega_power : Op::int_power, e.value});
        break;
      }
    }
  }

  element_t CompiledTerm::evaluate(FiniteMonoid const&        M,
                                   std::span<element_t const> values) const {
    std::vector<element_t> scratch(_depth);
    return evaluate(M, values, scratch);
  }

  element_t CompiledTerm::evaluate(FiniteMonoid const&        M,
                                   std::span<element_t const> values,
                                   std::span<element_t>       scratch) const {
    std::size_t top = 0;
    for (auto const& ins : _program) {
      switch (ins.op) {
        case Op::unit:
          scratch[top++] = M.identity();
          break;
        case Op::load:
          scratch[top++] = values[static_cast<std::size_t>(ins.arg)];
          break;
        case Op::multiply:
          --top;
          scratch[top - 1] = M.product(scratch[top - 1], scratch[top]);
          break;
        case Op::int_power:
          scratch[top - 1] = M.power(scratch[top - 1], static_cast<std::uint64_t>(ins.arg));
          break;
        case Op::omega_power:
          scratch[top - 1] = M.omega_power(scratch[top - 1], ins.arg);
          break;
      }
    }
    return scratch[0];
  }

  element_t evaluate(Term const&                term,
                     FiniteMonoid const&        M,
                     std::string_view           variables,
                     std::span<element_t const> values) {
    if (values.size() < variables.size()) {
      throw InvalidArgument("fewer values than variables");
    }
    for (auto v : values) {
      if (v >= M.size()) {
        throw InvalidArgument("element " + std::to_string(v) + " out of range");
      }
    }
    return CompiledTerm(term, variables).evaluate(M, values);
  }

}  // namespace omegamon
