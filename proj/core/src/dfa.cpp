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

#include "omegamon/dfa.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "omegamon/error.hpp"

namespace omegamon {

  namespace {
    void check_alphabet(std::string const& alphabet) {
      if (alphabet.empty()) {
        throw InvalidArgument("alphabet must be nonempty");
      }
      std::string sorted = alphabet;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidArgument("alphabet '" + alphabet + "' repeats a letter");
      }
      for (char c : alphabet) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
          throw InvalidArgument("alphabet letters must not be blank");
        }
      }
    }

    void check_same_alphabet(Dfa const& a, Dfa const& b) {
      if (a.alphabet() != b.alphabet()) {
        throw InvalidArgument("automata over different alphabets '" + a.alphabet()
                              + "' and '" + b.alphabet() + "'");
      }
    }

    enum class Combine { intersection, union_of, difference };

    Dfa product(Dfa const& a, Dfa const& b, Combine how) {
      check_same_alphabet(a, b);
      std::size_t const k = a.alphabet().size();
      std::map<std::pair<state_t, state_t>, state_t> ids;
      std::vector<std::pair<state_t, state_t>>       states;
      std::vector<state_t>                           delta;
      auto id_of = [&](state_t p, state_t q) {
        auto [it, inserted] = ids.try_emplace({p, q}, static_cast<state_t>(states.size()));
        if (inserted) {
          states.emplace_back(p, q);
        }
        return it->second;
      };
      id_of(a.initial(), b.initial());
      for (std::size_t s = 0; s < states.size(); ++s) {
        auto const [p, q] = states[s];
        for (std::size_t i = 0; i < k; ++i) {
          delta.push_back(id_of(a.next(p, i), b.next(q, i)));
        }
      }
      std::vector<bool> finals(states.size());
      for (std::size_t s = 0; s < states.size(); ++s) {
        bool const fa = a.is_final(states[s].first);
        bool const fb = b.is_final(states[s].second);
        switch (how) {
          case Combine::intersection: finals[s] = fa && fb; break;
          case Combine::union_of: finals[s] = fa || fb; break;
          case Combine::difference: finals[s] = fa && !fb; break;
        }
      }
      return minimize(Dfa(a.alphabet(), states.size(), 0, std::move(finals), std::move(delta)));
    }

    std::vector<state_t> epsilon_closure(Nfa const& nfa, std::vector<state_t> set) {
      std::vector<bool> in(nfa.states, false);
      for (auto q : set) {
        in[q] = true;
      }
      for (std::size_t i = 0; i < set.size(); ++i) {
        for (auto r : nfa.epsilon[set[i]]) {
          if (!in[r]) {
            in[r] = true;
            set.push_back(r);
          }
        }
      }
      std::sort(set.begin(), set.end());
      return set;
    }
  }  // namespace

  Dfa::Dfa(std::string          alphabet,
           std::size_t          states,
           state_t              initial,
           std::vector<bool>    finals,
           std::vector<state_t> delta)
      : _alphabet(std::move(alphabet)),
        _states(states),
        _initial(initial),
        _finals(std::move(finals)),
        _delta(std::move(delta)) {
    check_alphabet(_alphabet);
    if (_states == 0) {
      throw InvalidArgument("an automaton needs at least one state");
    }
    if (_initial >= _states) {
      throw InvalidArgument("initial state out of range");
    }
    if (_finals.size() != _states) {
      throw InvalidArgument("final-state flags do not match the state count");
    }
    if (_delta.size() != _states * _alphabet.size()) {
      throw InvalidArgument("transition table is not complete");
    }
    for (auto q : _delta) {
      if (q >= _states) {
        throw InvalidArgument("transition target out of range");
      }
    }
  }

  Dfa Dfa::empty_language(std::string alphabet) {
    std::size_t const k = alphabet.size();
    return Dfa(std::move(alphabet), 1, 0, {false}, std::vector<state_t>(k, 0));
  }

  Dfa Dfa::universal(std::string alphabet) {
    std::size_t const k = alphabet.size();
    return Dfa(std::move(alphabet), 1, 0, {true}, std::vector<state_t>(k, 0));
  }

  Dfa Dfa::word(std::string alphabet, std::string_view w) {
    std::size_t const k    = alphabet.size();
    std::size_t const n    = w.size() + 2;  // prefixes of w, then a sink
    auto const        sink = static_cast<state_t>(n - 1);
    std::vector<state_t> delta(n * k, sink);
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto const pos = alphabet.find(w[i]);
      if (pos == std::string::npos) {
        throw InvalidArgument(std::string("letter '") + w[i] + "' not in alphabet");
      }
      delta[i * k + pos] = static_cast<state_t>(i + 1);
    }
    std::vector<bool> finals(n, false);
    finals[w.size()] = true;
    return Dfa(std::move(alphabet), n, 0, std::move(finals), std::move(delta));
  }

  std::optional<std::size_t> Dfa::letter_index(char c) const noexcept {
    auto const pos = _alphabet.find(c);
    if (pos == std::string::npos) {
      return std::nullopt;
    }
    return pos;
  }

  state_t Dfa::run(state_t q, std::string_view word) const {
    for (char c : word) {
      auto const i = letter_index(c);
      if (!i) {
        throw InvalidArgument(std::string("letter '") + c + "' not in alphabet '"
                              + _alphabet + "'");
      }
      q = next(q, *i);
    }
    return q;
  }

  bool Dfa::accepts(std::string_view word) const {
    return is_final(run(_initial, word));
  }

  Nfa::Nfa(std::string alpha, std::size_t n)
      : alphabet(std::move(alpha)),
        states(n),
        finals(n, false),
        delta(n * alphabet.size()),
        epsilon(n) {}

  Nfa Nfa::from_dfa(Dfa const& d, std::size_t extra_states) {
    std::size_t const k = d.alphabet().size();
    Nfa               nfa(d.alphabet(), d.state_count() + extra_states);
    nfa.initial = {d.initial()};
    for (state_t q = 0; q < d.state_count(); ++q) {
      nfa.finals[q] = d.is_final(q);
      for (std::size_t i = 0; i < k; ++i) {
        nfa.delta[q * k + i].push_back(d.next(q, i));
      }
    }
    return nfa;
  }

  Dfa determinize(Nfa const& nfa, std::size_t max_states) {
    std::size_t const k = nfa.alphabet.size();
    std::map<std::vector<state_t>, state_t> ids;
    std::vector<std::vector<state_t>>       subsets;
    std::vector<state_t>                    delta;
    auto id_of = [&](std::vector<state_t> set) {
      auto [it, inserted] = ids.try_emplace(set, static_cast<state_t>(subsets.size()));
      if (inserted) {
        if (subsets.size() >= max_states) {
          throw BudgetExceeded("subset construction exceeds " + std::to_string(max_states)
                               + " states");
        }
        subsets.push_back(std::move(set));
      }
      return it->second;
    };
    id_of(epsilon_closure(nfa, nfa.initial));
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<state_t> target;
        for (auto q : subsets[s]) {
          auto const& ts = nfa.delta[q * k + i];
          target.insert(target.end(), ts.begin(), ts.end());
        }
        std::sort(target.begin(), target.end());
        target.erase(std::unique(target.begin(), target.end()), target.end());
        delta.push_back(id_of(epsilon_closure(nfa, std::move(target))));
      }
    }
    std::vector<bool> finals(subsets.size(), false);
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      finals[s] = std::any_of(subsets[s].begin(), subsets[s].end(),
                              [&](state_t q) { return nfa.finals[q]; });
    }
    return Dfa(nfa.alphabet, subsets.size(), 0, std::move(finals), std::move(delta));
  }

  std::vector<bool> accessible_states(Dfa const& d) {
    std::size_t const    k = d.alphabet().size();
    std::vector<bool>    seen(d.state_count(), false);
    std::vector<state_t> queue{d.initial()};
    seen[d.initial()] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (std::size_t a = 0; a < k; ++a) {
        state_t const r = d.next(queue[i], a);
        if (!seen[r]) {
          seen[r] = true;
          queue.push_back(r);
        }
      }
    }
    return seen;
  }

  std::vector<bool> coaccessible_states(Dfa const& d) {
    std::size_t const                 n = d.state_count();
    std::size_t const                 k = d.alphabet().size();
    std::vector<std::vector<state_t>> preds(n);
    for (state_t q = 0; q < n; ++q) {
      for (std::size_t a = 0; a < k; ++a) {
        preds[d.next(q, a)].push_back(q);
      }
    }
    std::vector<bool>    seen(n, false);
    std::vector<state_t> queue;
    for (state_t q = 0; q < n; ++q) {
      if (d.is_final(q)) {
        seen[q] = true;
        queue.push_back(q);
      }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto p : preds[queue[i]]) {
        if (!seen[p]) {
          seen[p] = true;
          queue.push_back(p);
        }
      }
    }
    return seen;
  }

  Dfa minimize(Dfa const& d) {
    std::size_t const k = d.alphabet().size();

    // Restrict to accessible states.
    auto const           reach = accessible_states(d);
    std::vector<state_t> local(d.state_count(), 0);
    std::vector<state_t> states;
    for (state_t q = 0; q < d.state_count(); ++q) {
      if (reach[q]) {
        local[q] = static_cast<state_t>(states.size());
        states.push_back(q);
      }
    }
    std::size_t const n = states.size();

    // inverse[a][q] = states p with p.a = q
    std::vector<std::vector<std::vector<state_t>>> inverse(
        k, std::vector<std::vector<state_t>>(n));
    for (state_t p = 0; p < n; ++p) {
      for (std::size_t a = 0; a < k; ++a) {
        inverse[a][local[d.next(states[p], a)]].push_back(p);
      }
    }

    // Hopcroft partition refinement.
    std::vector<std::vector<state_t>> blocks;
    std::vector<std::size_t>          block_of(n);
    {
      std::vector<state_t> fin, nonfin;
      for (state_t p = 0; p < n; ++p) {
        (d.is_final(states[p]) ? fin : nonfin).push_back(p);
      }
      for (auto* b : {&fin, &nonfin}) {
        if (!b->empty()) {
          for (auto p : *b) {
            block_of[p] = blocks.size();
          }
          blocks.push_back(std::move(*b));
        }
      }
    }
    std::vector<bool>        in_work(blocks.size(), false);
    std::vector<std::size_t> work;
    if (blocks.size() == 2) {
      std::size_t const smaller = blocks[0].size() <= blocks[1].size() ? 0 : 1;
      work.push_back(smaller);
      in_work[smaller] = true;
    }

    std::vector<bool>        marked(n, false);
    std::vector<std::size_t> marked_count;
    std::vector<std::size_t> touched;
    while (!work.empty()) {
      std::size_t const b = work.back();
      work.pop_back();
      in_work[b]                     = false;
      std::vector<state_t> const splitter = blocks[b];
      for (std::size_t a = 0; a < k; ++a) {
        marked_count.assign(blocks.size(), 0);
        touched.clear();
        std::vector<state_t> preimage;
        for (auto q : splitter) {
          for (auto p : inverse[a][q]) {
            if (!marked[p]) {
              marked[p] = true;
              preimage.push_back(p);
              if (marked_count[block_of[p]]++ == 0) {
                touched.push_back(block_of[p]);
              }
            }
          }
        }
        for (auto y : touched) {
          if (marked_count[y] == blocks[y].size()) {
            continue;
          }
          std::vector<state_t> in_x, out_x;
          for (auto p : blocks[y]) {
            (marked[p] ? in_x : out_x).push_back(p);
          }
          std::size_t const z = blocks.size();
          blocks[y]           = std::move(out_x);
          blocks.push_back(std::move(in_x));
          in_work.push_back(false);
          for (auto p : blocks[z]) {
            block_of[p] = z;
          }
          if (in_work[y]) {
            work.push_back(z);
            in_work[z] = true;
          } else {
            std::size_t const smaller = blocks[y].size() <= blocks[z].size() ? y : z;
            work.push_back(smaller);
            in_work[smaller] = true;
          }
        }
        for (auto p : preimage) {
          marked[p] = false;
        }
      }
    }

    // Canonical breadth-first numbering of the quotient.
    constexpr std::size_t    unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> number(blocks.size(), unset);
    std::vector<std::size_t> order{block_of[local[d.initial()]]};
    number[order.front()] = 0;
    std::vector<state_t> delta;
    for (std::size_t i = 0; i < order.size(); ++i) {
      state_t const rep = states[blocks[order[i]].front()];
      for (std::size_t a = 0; a < k; ++a) {
        std::size_t const target = block_of[local[d.next(rep, a)]];
        if (number[target] == unset) {
          number[target] = order.size();
          order.push_back(target);
        }
        delta.push_back(static_cast<state_t>(number[target]));
      }
    }
    std::vector<bool> finals(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      finals[i] = d.is_final(states[blocks[order[i]].front()]);
    }
    return Dfa(d.alphabet(), order.size(), 0, std::move(finals), std::move(delta));
  }

  Dfa complement(Dfa const& d) {
    std::vector<bool> finals(d.state_count());
    for (state_t q = 0; q < d.state_count(); ++q) {
      finals[q] = !d.is_final(q);
    }
    return minimize(Dfa(d.alphabet(), d.state_count(), d.initial(), std::move(finals),
                        d.delta()));
  }

  Dfa intersection(Dfa const& a, Dfa const& b) {
    return product(a, b, Combine::intersection);
  }

  Dfa union_of(Dfa const& a, Dfa const& b) {
    return product(a, b, Combine::union_of);
  }

  Dfa difference(Dfa const& a, Dfa const& b) {
    return product(a, b, Combine::difference);
  }

  Dfa concatenation(Dfa const& a, Dfa const& b) {
    check_same_alphabet(a, b);
    std::size_t const k      = a.alphabet().size();
    auto const        offset = static_cast<state_t>(a.state_count());
    Nfa               nfa    = Nfa::from_dfa(a, b.state_count());
    for (state_t q = 0; q < a.state_count(); ++q) {
      nfa.finals[q] = false;
      if (a.is_final(q)) {
        nfa.epsilon[q].push_back(offset + b.initial());
      }
    }
    for (state_t q = 0; q < b.state_count(); ++q) {
      nfa.finals[offset + q] = b.is_final(q);
      for (std::size_t i = 0; i < k; ++i) {
        nfa.delta[(offset + q) * k + i].push_back(offset + b.next(q, i));
      }
    }
    return minimize(determinize(nfa));
  }

  Dfa star(Dfa const& a) {
    auto const start = static_cast<state_t>(a.state_count());
    Nfa        nfa   = Nfa::from_dfa(a, 1);
    nfa.initial      = {start};
    nfa.finals[start] = true;
    nfa.epsilon[start].push_back(a.initial());
    for (state_t q = 0; q < a.state_count(); ++q) {
      if (a.is_final(q)) {
        nfa.epsilon[q].push_back(a.initial());
      }
    }
    return minimize(determinize(nfa));
  }

  Dfa plus(Dfa const& a) {
    return concatenation(a, star(a));
  }

  Dfa factor_closure(Dfa const& d) {
    auto const reach = accessible_states(d);
    auto const co    = coaccessible_states(d);
    Nfa        nfa   = Nfa::from_dfa(d);
    nfa.initial.clear();
    for (state_t q = 0; q < d.state_count(); ++q) {
      if (reach[q] && co[q]) {
        nfa.initial.push_back(q);
      }
      nfa.finals[q] = co[q];
    }
    if (nfa.initial.empty()) {
      return Dfa::empty_language(d.alphabet());
    }
    return minimize(determinize(nfa));
  }

  bool equivalent(Dfa const& a, Dfa const& b) {
    check_same_alphabet(a, b);
    return minimize(a) == minimize(b);
  }

  bool is_empty(Dfa const& d) {
    auto const reach = accessible_states(d);
    for (state_t q = 0; q < d.state_count(); ++q) {
      if (reach[q] && d.is_final(q)) {
        return false;
      }
    }
    return true;
  }

  void write_dfa(std::ostream& out, Dfa const& d) {
    out << "alphabet " << d.alphabet() << '\n';
    out << "states " << d.state_count() << '\n';
    out << "initial " << d.initial() << '\n';
    out << "finals";
    for (state_t q = 0; q < d.state_count(); ++q) {
      if (d.is_final(q)) {
        out << ' ' << q;
      }
    }
    out << '\n';
    std::size_t const k = d.alphabet().size();
    for (state_t q = 0; q < d.state_count(); ++q) {
      for (std::size_t i = 0; i < k; ++i) {
        out << (i == 0 ? "" : " ") << d.next(q, i);
      }
      out << '\n';
    }
  }

  Dfa read_dfa(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
      while (std::getline(in, line)) {
        ++line_no;
        auto const first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos && line[first] != '#') {
          return true;
        }
      }
      return false;
    };
    auto fail = [&](std::string const& what) -> void {
      throw ParseError("dfa file: " + what, line_no);
    };
    auto number = [&](std::string const& token) -> std::size_t {
      std::size_t pos = 0;
      std::size_t v   = 0;
      try {
        v = std::stoul(token, &pos);
      } catch (std::exception const&) {
        pos = 0;
      }
      if (pos == 0 || pos != token.size() || token.front() == '-') {
        fail("expected a non-negative integer, got '" + token + "'");
      }
      return v;
    };
    auto header = [&](char const* keyword, std::vector<std::string>& rest) {
      if (!next_line()) {
        fail(std::string("missing '") + keyword + "' line");
      }
      std::istringstream ss(line);
      std::string        word;
      ss >> word;
      if (word != keyword) {
        fail(std::string("expected '") + keyword + "', got '" + word + "'");
      }
      rest.clear();
      while (ss >> word) {
        rest.push_back(word);
      }
    };

    std::vector<std::string> rest;
    header("alphabet", rest);
    if (rest.size() != 1) {
      fail("'alphabet' takes one word of letters");
    }
    std::string const alphabet = rest[0];
    header("states", rest);
    if (rest.size() != 1) {
      fail("'states' takes one integer");
    }
    std::size_t const n = number(rest[0]);
    header("initial", rest);
    if (rest.size() != 1) {
      fail("'initial' takes one state");
    }
    auto const initial = static_cast<state_t>(number(rest[0]));
    header("finals", rest);
    std::vector<bool> finals(n, false);
    for (auto const& t : rest) {
      std::size_t const q = number(t);
      if (q >= n) {
        fail("final state out of range");
      }
      finals[q] = true;
    }
    std::vector<state_t> delta;
    for (std::size_t q = 0; q < n; ++q) {
      if (!next_line()) {
        fail("expected " + std::to_string(n) + " transition rows");
      }
      std::istringstream ss(line);
      std::string        t;
      std::size_t        count = 0;
      while (ss >> t) {
        delta.push_back(static_cast<state_t>(number(t)));
        ++count;
      }
      if (count != alphabet.size()) {
        fail("transition row has " + std::to_string(count) + " targets, expected "
             + std::to_string(alphabet.size()));
      }
    }
    if (next_line()) {
      fail("unexpected trailing line '" + line + "'");
    }
    try {
      return Dfa(alphabet, n, initial, std::move(finals), std::move(delta));
    } catch (ParseError const&) {
      throw;
    } catch (InvalidArgument const& e) {
      throw InvalidArgument(std::string("dfa file: ") + e.what());
    }
  }

  std::string to_dfa_text(Dfa const& d) {
    std::ostringstream out;
    write_dfa(out, d);
    return out.str();
  }

  Dfa from_dfa_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_dfa(in);
  }

  Dfa load_dfa_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InvalidArgument("cannot open dfa file '" + path + "'");
    }
    return read_dfa(in);
  }

}  // namespace omegamon
