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

#include "omegamon/regex.hpp"

#include <algorithm>

#include "omegamon/error.hpp"

namespace omegamon {

  namespace {
    constexpr std::string_view operators = "|&~*+().";

    bool is_blank(char c) {
      return c == ' ' || c == '\t' || c == '\n' || c == '\r';
    }

    class Parser {
     public:
      Parser(std::string_view pattern, std::string alphabet)
          : _text(pattern), _alphabet(std::move(alphabet)) {}

      Dfa parse() {
        Dfa result = parse_union();
        skip();
        if (_pos != _text.size()) {
          throw ParseError(std::string("unexpected '") + _text[_pos] + "'", _pos);
        }
        return result;
      }

     private:
      void skip() {
        while (_pos < _text.size() && is_blank(_text[_pos])) {
          ++_pos;
        }
      }

      char peek() {
        skip();
        return _pos < _text.size() ? _text[_pos] : '\0';
      }

      bool starts_unary(char c) const {
        return c != '\0' && c != '|' && c != '&' && c != ')' && c != '*' && c != '+';
      }

      Dfa parse_union() {
        Dfa result = parse_inter();
        while (peek() == '|') {
          ++_pos;
          result = union_of(result, parse_inter());
        }
        return result;
      }

      Dfa parse_inter() {
        Dfa result = parse_concat();
        while (peek() == '&') {
          ++_pos;
          result = intersection(result, parse_concat());
        }
        return result;
      }

      Dfa parse_concat() {
        if (!starts_unary(peek())) {
          if (_pos < _text.size()) {
            throw ParseError(std::string("expected an expression before '") + _text[_pos]
                                 + "'",
                             _pos);
          }
          throw ParseError("unexpected end of pattern", _pos);
        }
        Dfa result = parse_unary();
        while (starts_unary(peek())) {
          result = concatenation(result, parse_unary());
        }
        return result;
      }

      Dfa parse_unary() {
        if (peek() == '~') {
          ++_pos;
          if (!starts_unary(peek())) {
            throw ParseError("'~' needs an operand", _pos);
          }
          return complement(parse_unary());
        }
        return parse_postfix();
      }

      Dfa parse_postfix() {
        Dfa result = parse_atom();
        for (char c = peek(); c == '*' || c == '+'; c = peek()) {
          ++_pos;
          result = c == '*' ? star(result) : plus(result);
        }
        return result;
      }

      Dfa parse_atom() {
        char const        c     = peek();
        std::size_t const start = _pos;
        if (c == '(') {
          ++_pos;
          if (peek() == ')') {
            ++_pos;
            return Dfa::empty_language(_alphabet);
          }
          Dfa inner = parse_union();
          if (peek() != ')') {
            throw ParseError("missing ')' for '(' at " + std::to_string(start), _pos);
          }
          ++_pos;
          return inner;
        }
        if (c == '.') {
          ++_pos;
          Dfa any = Dfa::empty_language(_alphabet);
          for (char a : _alphabet) {
            any = union_of(any, Dfa::word(_alphabet, std::string(1, a)));
          }
          return any;
        }
        if (_alphabet.find(c) == std::string::npos) {
          throw ParseError(std::string("letter '") + c + "' is not in alphabet '"
                               + _alphabet + "'",
                           _pos);
        }
        ++_pos;
        return Dfa::word(_alphabet, std::string(1, c));
      }

      std::string_view _text;
      std::string      _alphabet;
      std::size_t      _pos = 0;
    };
  }  // namespace

  Dfa compile(std::string_view pattern, std::string_view alphabet) {
    if (alphabet.empty()) {
      throw InvalidArgument("regex: alphabet must be nonempty");
    }
    for (char c : alphabet) {
      if (operators.find(c) != std::string_view::npos || is_blank(c)) {
        throw InvalidArgument(std::string("regex: '") + c
                              + "' cannot be an alphabet letter");
      }
    }
    Parser parser(pattern, std::string(alphabet));
    return minimize(parser.parse());
  }

  std::string pattern_letters(std::string_view pattern) {
    std::string letters;
    for (char c : pattern) {
      if (operators.find(c) == std::string_view::npos && !is_blank(c)
          && letters.find(c) == std::string::npos) {
        letters.push_back(c);
      }
    }
    std::sort(letters.begin(), letters.end());
    return letters;
  }

}  // namespace omegamon
