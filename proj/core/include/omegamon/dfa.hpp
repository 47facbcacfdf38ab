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

#ifndef OMEGAMON_DFA_HPP_
#define OMEGAMON_DFA_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace omegamon {

  using state_t = std::uint32_t;

  // Complete deterministic automaton over an alphabet of single characters.
  // delta[q * |A| + i] is the target of state q on letter alphabet[i].
  class Dfa {
   public:
    Dfa(std::string          alphabet,
        std::size_t          states,
        state_t              initial,
        std::vector<bool>    finals,
        std::vector<state_t> delta);

    static Dfa empty_language(std::string alphabet);
    static Dfa universal(std::string alphabet);
    // The singleton language {word}.
    static Dfa word(std::string alphabet, std::string_view word);

    std::string const& alphabet() const noexcept {
      return _alphabet;
    }

    std::size_t state_count() const noexcept {
      return _states;
    }

    state_t initial() const noexcept {
      return _initial;
    }

    bool is_final(state_t q) const noexcept {
      return _finals[q];
    }

    std::vector<bool> const& finals() const noexcept {
      return _finals;
    }

    std::vector<state_t> const& delta() const noexcept {
      return _delta;
    }

    state_t next(state_t q, std::size_t letter) const noexcept {
      return _delta[static_cast<std::size_t>(q) * _alphabet.size() + letter];
    }

    std::optional<std::size_t> letter_index(char c) const noexcept;

    // Throws InvalidArgument on letters outside the alphabet.
    state_t run(state_t q, std::string_view word) const;
    bool    accepts(std::string_view word) const;

    bool operator==(Dfa const&) const = default;

   private:
    std::string          _alphabet;
    std::size_t          _states;
    state_t              _initial;
    std::vector<bool>    _finals;
    std::vector<state_t> _delta;
  };

  // Nondeterministic automaton with epsilon moves, used for concatenation,
  // star and factor closure before determinization.
  struct Nfa {
    std::string                       alphabet;
    std::size_t                       states = 0;
    std::vector<state_t>              initial;
    std::vector<bool>                 finals;
    std::vector<std::vector<state_t>> delta;    // states x |A| target lists
    std::vector<std::vector<state_t>> epsilon;  // per state

    explicit Nfa(std::string alpha = {}, std::size_t n = 0);
    static Nfa from_dfa(Dfa const& d, std::size_t offset_states = 0);
  };

  // Subset construction; the empty subset becomes a sink.
  Dfa determinize(Nfa const& nfa, std::size_t max_states = 1'000'000);

  // Hopcroft minimization followed by canonical numbering: breadth-first
  // from the initial state, letters in alphabet order.  Two automata
  // recognize the same language iff their minimizations are equal.
  Dfa minimize(Dfa const& d);

  std::vector<bool> accessible_states(Dfa const& d);
  std::vector<bool> coaccessible_states(Dfa const& d);

  Dfa complement(Dfa const& d);
  Dfa intersection(Dfa const& a, Dfa const& b);
  Dfa union_of(Dfa const& a, Dfa const& b);
  Dfa difference(Dfa const& a, Dfa const& b);
  Dfa concatenation(Dfa const& a, Dfa const& b);
  Dfa star(Dfa const& a);
  Dfa plus(Dfa const& a);

  // F(L): all factors of words of L.
  Dfa factor_closure(Dfa const& d);

  bool equivalent(Dfa const& a, Dfa const& b);
  bool is_empty(Dfa const& d);

  // Text format:
  //   alphabet abc
  //   states n
  //   initial i
  //   finals i j ...
  //   n lines of |A| targets, one line per state
  void        write_dfa(std::ostream& out, Dfa const& d);
  Dfa         read_dfa(std::istream& in);
  std::string to_dfa_text(Dfa const& d);
  Dfa         from_dfa_text(std::string_view text);
  Dfa         load_dfa_file(std::string const& path);

}  // namespace omegamon

#endif  // OMEGAMON_DFA_HPP_
