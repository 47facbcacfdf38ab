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

#ifndef OMEGAMON_WORDS_HPP_
#define OMEGAMON_WORDS_HPP_

#include <cstddef>
#include <string>
#include <string_view>

namespace omegamon {

  std::string repeat(std::string_view w, std::size_t times);

  // True iff some factor of w equals u^n for a nonempty word u.  Scans every
  // factor; no incremental state.
  bool contains_power_factor(std::string_view w, std::size_t n);

  // True iff w is in base*.
  bool in_star_of(std::string_view w, std::string_view base);

  // True iff w is a factor of some word of base*.
  bool is_factor_of_star(std::string_view w, std::string_view base);

  // Letter counts of w, indexed by unsigned char.
  struct LetterCounts {
    std::size_t count[256] = {};
  };
  LetterCounts letter_counts(std::string_view w);

}  // namespace omegamon

#endif  // OMEGAMON_WORDS_HPP_
