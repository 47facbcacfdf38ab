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

#ifndef OMEGAMON_PRESENTATION_HPP_
#define OMEGAMON_PRESENTATION_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omegamon/monoid.hpp"
#include "omegamon/rewriting.hpp"

namespace omegamon {

  // A monoid presentation, optionally with an absorbing zero.  Words are
  // strings over the generator letters; the empty word is the identity.
  struct Presentation {
    std::string                                      generators;
    std::vector<std::pair<std::string, std::string>> relations;
    std::vector<std::string>                         zero_rules;  // w = 0
    bool                                             has_zero = false;

    // Throws InvalidArgument for words outside the generators.
    void validate() const;
  };

  // Text format, one item per line, '#' starts a comment:
  //   gens ab
  //   rel aab = a        ("1" is the empty word)
  //   zero aba           (also declares the zero)
  //   zero               (declare the zero without rules)
  Presentation read_presentation(std::istream& in);
  Presentation from_presentation_text(std::string_view text);
  Presentation load_presentation_file(std::string const& path);
  void         write_presentation(std::ostream& out, Presentation const& p);
  std::string  to_presentation_text(Presentation const& p);

  // a^n b^n a^n = a^n, b^n a^n b^n = b^n,
  // a^(n+1) = b^(n+1) = a b^i a = b a^i b = 0 (1 <= i < n).
  Presentation builder_monoid_0(unsigned n);
  // a^n b a^n = a^n, b a^n b = b, b a^i b = 0 (0 <= i < n), a^(n+1) = 0.
  Presentation builder_monoid_1(unsigned n);

  struct PresentedMonoid {
    // Labels are the shortlex-least words of each element, "0" for the zero.
    FiniteMonoid             monoid;
    std::vector<std::string> normal_forms;  // "" for the identity
    std::optional<element_t> zero;
    RewritingSystem          rewriting;

    // The element represented by a word over the generators (and '0').
    element_t element_of(std::string_view word) const;
  };

  struct PresentationLimits {
    CompletionLimits completion;
    std::size_t      max_elements = 100'000;
  };

  // Completes the presentation under the shortlex order with the zero
  // smallest, then enumerates the irreducible words.  Throws Undecided when
  // completion or enumeration exceeds the limits.
  PresentedMonoid enumerate_presentation(Presentation const&       p,
                                         PresentationLimits const& limits = {});

}  // namespace omegamon

#endif  // OMEGAMON_PRESENTATION_HPP_
