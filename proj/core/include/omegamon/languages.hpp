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

#ifndef OMEGAMON_LANGUAGES_HPP_
#define OMEGAMON_LANGUAGES_HPP_

#include <cstddef>
#include <string>
#include <string_view>

#include "omegamon/dfa.hpp"

namespace omegamon {

  // The period word of L_n for n >= 3: (b^(n-1) a)^(n-1) (ab)^(n-1) a^2.
  std::string ln_period_word(std::size_t n);

  // L_2 = (A* \ F((abcacb)*)) u (abcacb)^(1+2*) over {a, b, c}.  Its
  // syntactic ordered monoid satisfies 1 <= x^2.
  Dfa lang_L2();

  // L_n = (A* \ F(w*)) u w^(1+n*) over {a, b} with w = ln_period_word(n),
  // for n >= 3.
  Dfa lang_Ln(std::size_t n);

  // The words avoiding n-th powers that a witness language must reject:
  // "xyzxzy" for n = 2, (y^(n-1) x)^(n-1) (xy)^(n-1) x^2 for n >= 3.
  std::string power_free_word(std::size_t n);
  // Alphabet "xyzt" for n = 2 and "xyt" for n >= 3.
  std::string power_or_long_alphabet(std::size_t n);
  // Length bound 9 for n = 2 and (n + 1)^2 for n >= 3.
  std::size_t power_or_long_bound(std::size_t n);

  // Words containing a factor u^n (u nonempty) or of length at least the
  // bound above.  Built directly from the n-power-free words below the
  // bound; throws BudgetExceeded past `max_states` of them.
  Dfa lang_power_or_long(std::size_t n, std::size_t max_states = 2'000'000);

  // w^(k + l*) = { w^(k + l m) : m >= 0 }; l = 0 gives {w^k}.
  Dfa power_progression(std::string alphabet, std::string_view w, std::size_t k,
                        std::size_t l);

}  // namespace omegamon

#endif  // OMEGAMON_LANGUAGES_HPP_
