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

#ifndef OMEGAMON_SYNTACTIC_HPP_
#define OMEGAMON_SYNTACTIC_HPP_

#include <string_view>
#include <vector>

#include "omegamon/bit_matrix.hpp"
#include "omegamon/dfa.hpp"
#include "omegamon/monoid.hpp"
#include "omegamon/order.hpp"

namespace omegamon {

  // The syntactic ordered monoid of a regular language L.
  //
  // Orientation: u <= v iff for all x, y, x u y in L implies x v y in L.
  // (Some texts use the reverse order.)
  struct SyntacticResult {
    Dfa                    minimal;
    OrderedMonoid          ordered;
    std::vector<bool>      accept;      // P: [w] in P iff w in L
    std::vector<element_t> letter_map;  // per alphabet letter

    FiniteMonoid const& monoid() const noexcept {
      return ordered.monoid();
    }

    // [w], the element of a word over the alphabet.
    element_t element_of(std::string_view word) const;
  };

  // Right-language inclusion between states: result.test(p, q) iff every
  // word accepted from p is accepted from q.
  BitMatrix state_language_inclusion(Dfa const& d);

  // The monoid is the transition monoid of the minimal automaton, with
  // generator letters in alphabet order.  m <= m' iff for every state r,
  // the language from r.m is contained in the language from r.m'.
  SyntacticResult syntactic_ordered_monoid(Dfa const&          language,
                                           MonoidLimits const& limits = {});

}  // namespace omegamon

#endif  // OMEGAMON_SYNTACTIC_HPP_
