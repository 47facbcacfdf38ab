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

#include "omegamon/words.hpp"

namespace omegamon {

  std::string repeat(std::string_view w, std::size_t times) {
    std::string result;
    result.reserve(w.size() * times);
    for (std::size_t i = 0; i < times; ++i) {
      result += w;
    }
    return result;
  }

  bool contains_power_factor(std::string_view w, std::size_t n) {
    if (n == 0) {
      return false;
    }
    for (std::size_t len = 1; len * n <= w.size(); ++len) {
      for (std::size_t start = 0; start + len * n <= w.size(); ++start) {
        bool match = true;
        for (std::size_t i = len; i < len * n && match; ++i) {
          match = w[start + i] == w[start + i - len];
        }
        if (match) {
          return true;
        }
      }
    }
    return false;
  }

  bool in_star_of(std::string_view w, std::string_view base) {
    if (base.empty()) {
      return w.empty();
    }
    if (w.size() % base.size() != 0) {
      return false;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != base[i % base.size()]) {
        return false;
      }
    }
    return true;
  }

  bool is_factor_of_star(std::string_view w, std::string_view base) {
    if (w.empty()) {
      return true;
    }
    if (base.empty()) {
      return false;
    }
    std::string const host = repeat(base, w.size() / base.size() + 2);
    return host.find(w) != std::string::npos;
  }

  LetterCounts letter_counts(std::string_view w) {
    LetterCounts c;
    for (char x : w) {
      ++c.count[static_cast<unsigned char>(x)];
    }
    return c;
  }

}  // namespace omegamon
