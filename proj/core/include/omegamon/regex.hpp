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

#ifndef OMEGAMON_REGEX_HPP_
#define OMEGAMON_REGEX_HPP_

#include <string>
#include <string_view>

#include "omegamon/dfa.hpp"

namespace omegamon {

  // Compile a pattern to its minimal automaton over `alphabet`.
  //
  //   union   := inter ('|' inter)*
  //   inter   := concat ('&' concat)*
  //   concat  := unary+
  //   unary   := '~' unary | postfix
  //   postfix := atom ('*' | '+')*
  //   atom    := letter | '.' | '(' union ')' | '(' ')'
  //
  // '.' is any letter, '~' is complement within A*, '&' is intersection and
  // '()' is the empty language (so '()*' is the empty word).  Blanks are
  // ignored.  Throws ParseError with the offending offset.
  Dfa compile(std::string_view pattern, std::string_view alphabet);

  // Sorted distinct letters of a pattern, ignoring operator characters.
  std::string pattern_letters(std::string_view pattern);

}  // namespace omegamon

#endif  // OMEGAMON_REGEX_HPP_
