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

#include "omegamon/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "omegamon/error.hpp"
#include "omegamon/words.hpp"

namespace omegamon {

  namespace {

    constexpr char zero_symbol = '0';

    std::string word_text(std::string const& w) {
      return w.empty() ? "1" : w;
    }

    std::string text_word(std::string const& w) {
      return w == "1" ? std::string() : w;
    }

  }  // namespace

  void Presentation::validate() const {
    std::string sorted = generators;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidArgument("repeated generator in '" + generators + "'");
    }
    for (char c : generators) {
      if (std::isalpha(static_cast<unsigned char>(c)) == 0) {
        throw InvalidArgument(std::string("generators are letters, found '") + c + "'");
      }
    }
    auto check_word = [this](std::string const& w) {
      for (char c : w) {
        if (generators.find(c) == std::string::npos) {
          throw InvalidArgument("word '" + w + "' uses '" + std::string(1, c)
                                + "', not a generator");
        }
      }
    };
    for (auto const& [a, b] : relations) {
      check_word(a);
      check_word(b);
    }
    if (!zero_rules.empty() && !has_zero) {
      throw InvalidArgument("zero rules given without a zero");
    }
    for (auto const& w : zero_rules) {
      check_word(w);
    }
  }

  Presentation read_presentation(std::istream& in) {
    Presentation p;
    bool         have_gens = false;
    std::string  line;
    std::size_t  number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (auto const hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream fields(line);
      std::string        keyword;
      if (!(fields >> keyword)) {
        continue;
      }
      auto fail = [number](std::string const& what) -> ParseError {
        return ParseError("presentation line " + std::to_string(number) + ": " + what,
                          number);
      };
      std::vector<std::string> rest;
      for (std::string item; fields >> item;) {
        rest.push_back(item);
      }
      if (keyword == "gens") {
        if (rest.size() != 1 || have_gens) {
          throw fail("expected a single 'gens' line with one word");
        }
        p.generators = rest[0];
        have_gens    = true;
      } else if (keyword == "rel") {
        if (rest.size() != 3 || rest[1] != "=") {
          throw fail("expected 'rel u = v'");
        }
        p.relations.emplace_back(text_word(rest[0]), text_word(rest[2]));
      } else if (keyword == "zero") {
        if (rest.size() > 1) {
          throw fail("expected 'zero' or 'zero w'");
        }
        p.has_zero = true;
        if (rest.size() == 1) {
          p.zero_rules.push_back(text_word(rest[0]));
        }
      } else {
        throw fail("unknown keyword '" + keyword + "'");
      }
    }
    if (!have_gens) {
      throw ParseError("presentation has no 'gens' line", number);
    }
    p.validate();
    return p;
  }

  Presentation from_presentation_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_presentation(in);
  }

  Presentation load_presentation_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InvalidArgument("cannot open presentation file '" + path + "'");
    }
    return read_presentation(in);
  }

  void write_presentation(std::ostream& out, Presentation const& p) {
    out << "gens " << p.generators << '\n';
    for (auto const& [a, b] : p.relations) {
      out << "rel " << word_text(a) << " = " << word_text(b) << '\n';
    }
    if (p.has_zero && p.zero_rules.empty()) {
      out << "zero\n";
    }
    for (auto const& w : p.zero_rules) {
      out << "zero " << word_text(w) << '\n';
    }
  }

  std::string to_presentation_text(Presentation const& p) {
    std::ostringstream out;
    write_presentation(out, p);
    return out.str();
  }

  Presentation builder_monoid_0(unsigned n) {
    if (n < 2) {
      throw InvalidArgument("builder_monoid_0 needs n >= 2");
    }
    std::string const an = repeat("a", n);
    std::string const bn = repeat("b", n);
    Presentation      p;
    p.generators = "ab";
    p.has_zero   = true;
    p.relations.emplace_back(an + bn + an, an);
    p.relations.emplace_back(bn + an + bn, bn);
    p.zero_rules.push_back(repeat("a", n + 1));
    p.zero_rules.push_back(repeat("b", n + 1));
    for (unsigned i = 1; i < n; ++i) {
      p.zero_rules.push_back("a" + repeat("b", i) + "a");
      p.zero_rules.push_back("b" + repeat("a", i) + "b");
    }
    return p;
  }

  Presentation builder_monoid_1(unsigned n) {
    if (n < 2) {
      throw InvalidArgument("builder_monoid_1 needs n >= 2");
    }
    std::string const an = repeat("a", n);
    Presentation      p;
    p.generators = "ab";
    p.has_zero   = true;
    p.relations.emplace_back(an + "b" + an, an);
    p.relations.emplace_back("b" + an + "b", "b");
    for (unsigned i = 0; i < n; ++i) {
      p.zero_rules.push_back("b" + repeat("a", i) + "b");
    }
    p.zero_rules.push_back(repeat("a", n + 1));
    return p;
  }

  element_t PresentedMonoid::element_of(std::string_view word) const {
    std::string const normal = rewriting.reduce(word);
    auto const it = std::find(normal_forms.begin(), normal_forms.end(), normal);
    if (it == normal_forms.end()) {
      throw InvalidArgument("word '" + std::string(word) + "' is not over the generators");
    }
    return static_cast<element_t>(it - normal_forms.begin());
  }

  PresentedMonoid enumerate_presentation(Presentation const&       p,
                                         PresentationLimits const& limits) {
    p.validate();
    std::string const symbols = (p.has_zero ? std::string(1, zero_symbol) : "") + p.generators;
    std::vector<std::pair<std::string, std::string>> equations = p.relations;
    if (p.has_zero) {
      for (auto const& w : p.zero_rules) {
        equations.emplace_back(w, std::string(1, zero_symbol));
      }
      for (char c : symbols) {
        equations.emplace_back(std::string{c, zero_symbol}, std::string(1, zero_symbol));
        equations.emplace_back(std::string{zero_symbol, c}, std::string(1, zero_symbol));
      }
    }
    RewritingSystem rewriting(ShortlexOrder(symbols), std::move(equations), limits.completion);

    std::size_t const                            k = p.generators.size();
    std::vector<std::string>                     words{""};
    std::unordered_map<std::string, element_t>   index{{"", 0}};
    std::vector<element_t>                       right;
    for (std::size_t pos = 0; pos < words.size(); ++pos) {
      for (std::size_t g = 0; g < k; ++g) {
        std::string next = rewriting.reduce(words[pos] + p.generators[g]);
        auto [it, inserted] = index.try_emplace(next, static_cast<element_t>(words.size()));
        if (inserted) {
          if (words.size() >= limits.max_elements) {
            throw Undecided("presentation has more than " + std::to_string(limits.max_elements)
                            + " elements; it may be infinite");
          }
          words.push_back(std::move(next));
        }
        right.push_back(it->second);
      }
    }
    std::vector<element_t> generators(right.begin(), right.begin() + static_cast<std::ptrdiff_t>(k));
    std::optional<element_t> zero;
    if (p.has_zero) {
      std::string const z(1, zero_symbol);
      auto const        it = index.find(z);
      if (it != index.end()) {
        zero = it->second;
      } else {
        zero = static_cast<element_t>(words.size());
        words.push_back(z);
        index.emplace(z, *zero);
        right.insert(right.end(), k, *zero);
        generators.push_back(*zero);
      }
    }

    std::size_t const n = words.size();
    check_table_budget(n, MonoidLimits{});
    std::vector<element_t> table(n * n);
    for (element_t s = 0; s < n; ++s) {
      for (element_t t = 0; t < n; ++t) {
        element_t result = s;
        if (zero && t == *zero) {
          result = *zero;
        } else {
          for (char c : words[t]) {
            result = right[result * k + p.generators.find(c)];
          }
        }
        table[static_cast<std::size_t>(s) * n + t] = result;
      }
    }
    FiniteMonoid M(n, std::move(table), 0, std::move(generators), words);
    return {std::move(M), std::move(words), zero, std::move(rewriting)};
  }

}  // namespace omegamon
