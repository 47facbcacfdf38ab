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

#include "omegamon/languages.hpp"

#include <unordered_map>

#include "omegamon/error.hpp"
#include "omegamon/words.hpp"

namespace omegamon {

  namespace {
    // True iff v ends with u^n for some nonempty u.
    bool has_power_suffix(std::string_view v, std::size_t n) {
      for (std::size_t len = 1; len * n <= v.size(); ++len) {
        std::size_t const start = v.size() - len * n;
        bool              match = true;
        for (std::size_t i = start + len; i < v.size() && match; ++i) {
          match = v[i] == v[i - len];
        }
        if (match) {
          return true;
        }
      }
      return false;
    }

    // (A* \ F(w*)) u w^(1 + n*)
    Dfa insertion_witness(std::string const& alphabet, std::string const& w, std::size_t n) {
      Dfa const powers = star(Dfa::word(alphabet, w));
      return union_of(complement(factor_closure(powers)),
                      power_progression(alphabet, w, 1, n));
    }
  }  // namespace

  std::string ln_period_word(std::size_t n) {
    if (n < 3) {
      throw InvalidArgument("ln_period_word requires n >= 3");
    }
    return repeat(repeat("b", n - 1) + "a", n - 1) + repeat("ab", n - 1) + "aa";
  }

  Dfa lang_L2() {
    return insertion_witness("abc", "abcacb", 2);
  }

  Dfa lang_Ln(std::size_t n) {
    if (n < 3) {
      throw InvalidArgument("lang_Ln requires n >= 3 (use lang_L2 for n = 2)");
    }
    return insertion_witness("ab", ln_period_word(n), n);
  }

  std::string power_free_word(std::size_t n) {
    if (n < 2) {
      throw InvalidArgument("power_free_word requires n >= 2");
    }
    if (n == 2) {
      return "xyzxzy";
    }
    return repeat(repeat("y", n - 1) + "x", n - 1) + repeat("xy", n - 1) + "xx";
  }

  std::string power_or_long_alphabet(std::size_t n) {
    if (n < 2) {
      throw InvalidArgument("power_or_long_alphabet requires n >= 2");
    }
    return n == 2 ? "xyzt" : "xyt";
  }

  std::size_t power_or_long_bound(std::size_t n) {
    if (n < 2) {
      throw InvalidArgument("power_or_long_bound requires n >= 2");
    }
    return n == 2 ? 9 : (n + 1) * (n + 1);
  }

  Dfa lang_power_or_long(std::size_t n, std::size_t max_states) {
    std::string const alphabet = power_or_long_alphabet(n);
    std::size_t const bound    = power_or_long_bound(n);
    std::size_t const k        = alphabet.size();

    // State 0 is the accepting sink; the others are n-power-free words
    // shorter than the bound, starting with the empty word.
    std::vector<std::string>                     words{"", ""};
    std::unordered_map<std::string, state_t>     ids{{"", 1}};
    std::vector<state_t>                         delta(k, 0);
    for (std::size_t s = 1; s < words.size(); ++s) {
      for (std::size_t i = 0; i < k; ++i) {
        std::string next = words[s] + alphabet[i];
        state_t     target = 0;
        if (next.size() < bound && !has_power_suffix(next, n)) {
          auto [it, inserted] = ids.try_emplace(next, static_cast<state_t>(words.size()));
          if (inserted) {
            if (words.size() > max_states) {
              throw BudgetExceeded("lang_power_or_long(" + std::to_string(n) + ") needs more than "
                                   + std::to_string(max_states) + " states");
            }
            words.push_back(std::move(next));
          }
          target = it->second;
        }
        delta.push_back(target);
      }
    }
    std::vector<bool> finals(words.size(), false);
    finals[0] = true;
    return minimize(Dfa(alphabet, words.size(), 1, std::move(finals), std::move(delta)));
  }

  Dfa power_progression(std::string alphabet, std::string_view w, std::size_t k,
                        std::size_t l) {
    if (w.empty()) {
      throw InvalidArgument("power_progression needs a nonempty word");
    }
    Dfa const head = Dfa::word(alphabet, repeat(w, k));
    if (l == 0) {
      return minimize(head);
    }
    return concatenation(head, star(Dfa::word(alphabet, repeat(w, l))));
  }

}  // namespace omegamon
