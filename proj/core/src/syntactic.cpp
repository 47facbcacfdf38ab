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

#include "omegamon/syntactic.hpp"

#include "omegamon/error.hpp"

namespace omegamon {

  element_t SyntacticResult::element_of(std::string_view word) const {
    element_t result = monoid().identity();
    for (char c : word) {
      auto const i = minimal.letter_index(c);
      if (!i) {
        throw InvalidArgument(std::string("letter '") + c + "' not in alphabet '"
                              + minimal.alphabet() + "'");
      }
      result = monoid().product(result, letter_map[*i]);
    }
    return result;
  }

  BitMatrix state_language_inclusion(Dfa const& d) {
    std::size_t const n = d.state_count();
    std::size_t const k = d.alphabet().size();
    // Greatest fixpoint: start from (p final => q final), then drop (p, q)
    // whenever some letter leads to a dropped pair.
    std::vector<std::vector<std::vector<state_t>>> preds(
        k, std::vector<std::vector<state_t>>(n));
    for (state_t q = 0; q < n; ++q) {
      for (std::size_t a = 0; a < k; ++a) {
        preds[a][d.next(q, a)].push_back(q);
      }
    }
    BitMatrix                                included(n);
    std::vector<std::pair<state_t, state_t>> dropped;
    for (state_t p = 0; p < n; ++p) {
      for (state_t q = 0; q < n; ++q) {
        if (!d.is_final(p) || d.is_final(q)) {
          included.set(p, q);
        } else {
          dropped.emplace_back(p, q);
        }
      }
    }
    while (!dropped.empty()) {
      auto const [p2, q2] = dropped.back();
      dropped.pop_back();
      for (std::size_t a = 0; a < k; ++a) {
        for (auto p : preds[a][p2]) {
          for (auto q : preds[a][q2]) {
            if (included.test(p, q)) {
              included.reset(p, q);
              dropped.emplace_back(p, q);
            }
          }
        }
      }
    }
    return included;
  }

  SyntacticResult syntactic_ordered_monoid(Dfa const& language, MonoidLimits const& limits) {
    Dfa               minimal = minimize(language);
    std::size_t const n       = minimal.state_count();
    std::size_t const k       = minimal.alphabet().size();

    std::vector<Transformation> letters;
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<std::uint32_t> images(n);
      for (state_t q = 0; q < n; ++q) {
        images[q] = minimal.next(q, a);
      }
      letters.emplace_back(std::move(images));
    }
    auto tm = transformation_monoid(letters, minimal.alphabet(), limits);
    FiniteMonoid&     M    = tm.monoid;
    std::size_t const size = M.size();

    std::vector<bool> accept(size);
    for (element_t m = 0; m < size; ++m) {
      accept[m] = minimal.is_final(tm.elements[m][minimal.initial()]);
    }

    BitMatrix const inclusion = state_language_inclusion(minimal);
    BitMatrix       leq(size);
    for (element_t m = 0; m < size; ++m) {
      auto const& tm_m = tm.elements[m];
      for (element_t m2 = 0; m2 < size; ++m2) {
        auto const& tm_m2 = tm.elements[m2];
        bool        below = true;
        for (state_t r = 0; r < n && below; ++r) {
          below = inclusion.test(tm_m[r], tm_m2[r]);
        }
        if (below) {
          leq.set(m, m2);
        }
      }
    }

    std::vector<element_t> letter_map = M.generators();
    OrderedMonoid          ordered(std::move(M), std::move(leq));
    return {std::move(minimal), std::move(ordered), std::move(accept), std::move(letter_map)};
  }

}  // namespace omegamon
