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

// Independent oracles shared by the unit suites.  Nothing here calls the
// algorithm it is used to check.

#ifndef OMEGAMON_TESTS_TEST_SUPPORT_HPP_
#define OMEGAMON_TESTS_TEST_SUPPORT_HPP_

#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "omegamon/dfa.hpp"
#include "omegamon/monoid.hpp"
#include "omegamon/transformation.hpp"

namespace omegamon::testing {

  // All words over `alphabet` of length <= max_len, shortest first.
  inline std::vector<std::string> words_up_to(std::string_view alphabet, std::size_t max_len) {
    std::vector<std::string> out{""};
    for (std::size_t begin = 0; begin < out.size(); ++begin) {
      if (out[begin].size() == max_len) {
        continue;
      }
      for (char c : alphabet) {
        out.push_back(out[begin] + c);
      }
    }
    return out;
  }

  // Closure of transformations as a std::set of image vectors, identity
  // included.
  inline std::set<std::vector<std::uint32_t>> naive_closure(
      std::vector<std::vector<std::uint32_t>> const& gens, std::size_t degree) {
    std::vector<std::uint32_t> id(degree);
    for (std::uint32_t i = 0; i < degree; ++i) {
      id[i] = i;
    }
    std::set<std::vector<std::uint32_t>>   seen{id};
    std::deque<std::vector<std::uint32_t>> todo{id};
    while (!todo.empty()) {
      auto f = todo.front();
      todo.pop_front();
      for (auto const& g : gens) {
        std::vector<std::uint32_t> h(degree);
        for (std::size_t i = 0; i < degree; ++i) {
          h[i] = g[f[i]];  // apply f, then g
        }
        if (seen.insert(h).second) {
          todo.push_back(h);
        }
      }
    }
    return seen;
  }

  // Powers s, s^2, ... until the first repeat: (index, period).
  inline std::pair<std::size_t, std::size_t> brute_index_period(FiniteMonoid const& M,
                                                                element_t           s) {
    std::map<element_t, std::size_t> first;
    element_t                        p = s;
    for (std::size_t e = 1;; ++e) {
      auto [it, inserted] = first.emplace(p, e);
      if (!inserted) {
        return {it->second, e - it->second};
      }
      p = M.product(p, s);
    }
  }

  // s^e by repeated multiplication.
  inline element_t slow_power(FiniteMonoid const& M, element_t s, std::size_t e) {
    element_t r = M.identity();
    for (std::size_t i = 0; i < e; ++i) {
      r = M.product(r, s);
    }
    return r;
  }

  // m <= m' iff {(p, q) : p m q in P} is contained in {(p, q) : p m' q in P}.
  inline std::vector<std::vector<bool>> context_order(FiniteMonoid const&      M,
                                                      std::vector<bool> const& accept) {
    std::size_t const              n = M.size();
    std::vector<std::vector<bool>> ctx(n, std::vector<bool>(n * n));
    for (element_t m = 0; m < n; ++m) {
      for (element_t p = 0; p < n; ++p) {
        element_t const pm = M.product(p, m);
        for (element_t q = 0; q < n; ++q) {
          ctx[m][p * n + q] = accept[M.product(pm, q)];
        }
      }
    }
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (element_t a = 0; a < n; ++a) {
      for (element_t b = 0; b < n; ++b) {
        bool sub = true;
        for (std::size_t i = 0; i < n * n && sub; ++i) {
          sub = !ctx[a][i] || ctx[b][i];
        }
        leq[a][b] = sub;
      }
    }
    return leq;
  }

  // 3x3 upper unitriangular matrices over F_3, the Heisenberg group of
  // order 27 = B(2, 3).  Stored as (a, b, c) for [[1,a,c],[0,1,b],[0,0,1]].
  using Heisenberg = std::array<int, 3>;

  inline Heisenberg heisenberg_mul(Heisenberg const& x, Heisenberg const& y) {
    return {(x[0] + y[0]) % 3, (x[1] + y[1]) % 3, (x[2] + y[2] + x[0] * y[1]) % 3};
  }

  inline Heisenberg heisenberg_word(std::string_view w) {
    Heisenberg r{0, 0, 0};
    for (char c : w) {
      r = heisenberg_mul(r, c == 'x' ? Heisenberg{1, 0, 0} : Heisenberg{0, 1, 0});
    }
    return r;
  }

  // Words reachable from u by inserting n-th powers over `alphabet`,
  // forward, never exceeding max_len.
  inline std::set<std::string> forward_insertion_closure(std::string const& u, unsigned n,
                                                         std::size_t      max_len,
                                                         std::string_view alphabet) {
    std::set<std::string>   seen{u};
    std::deque<std::string> todo{u};
    while (!todo.empty()) {
      std::string w = todo.front();
      todo.pop_front();
      for (std::size_t len = 1; w.size() + n * len <= max_len; ++len) {
        for (auto const& base : words_up_to(alphabet, len)) {
          if (base.size() != len) {
            continue;
          }
          std::string block;
          for (unsigned r = 0; r < n; ++r) {
            block += base;
          }
          for (std::size_t pos = 0; pos <= w.size(); ++pos) {
            std::string next = w.substr(0, pos) + block + w.substr(pos);
            if (seen.insert(next).second) {
              todo.push_back(next);
            }
          }
        }
      }
    }
    return seen;
  }

  // Language membership by running a DFA, written out longhand.
  inline bool dfa_accepts(Dfa const& d, std::string_view w) {
    state_t q = d.initial();
    for (char c : w) {
      q = d.next(q, *d.letter_index(c));
    }
    return d.is_final(q);
  }

}  // namespace omegamon::testing

#endif  // OMEGAMON_TESTS_TEST_SUPPORT_HPP_
