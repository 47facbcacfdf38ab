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

#include "omegamon/bit_matrix.hpp"

#include <bit>

namespace omegamon {

  BitMatrix::BitMatrix(std::size_t n)
      : _n(n), _words((n + 63) / 64), _bits(_n * _words, 0) {}

  bool BitMatrix::or_row_into(std::size_t i, std::size_t j) noexcept {
    std::uint64_t*       dst     = _bits.data() + i * _words;
    std::uint64_t const* src     = _bits.data() + j * _words;
    bool                 changed = false;
    for (std::size_t w = 0; w < _words; ++w) {
      std::uint64_t const next = dst[w] | src[w];
      changed |= next != dst[w];
      dst[w] = next;
    }
    return changed;
  }

  bool BitMatrix::row_subset(std::size_t i, std::size_t j) const noexcept {
    std::uint64_t const* a = _bits.data() + i * _words;
    std::uint64_t const* b = _bits.data() + j * _words;
    for (std::size_t w = 0; w < _words; ++w) {
      if ((a[w] & ~b[w]) != 0) {
        return false;
      }
    }
    return true;
  }

  std::size_t BitMatrix::count() const noexcept {
    std::size_t total = 0;
    for (auto w : _bits) {
      total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
  }

  void BitMatrix::transitive_closure() noexcept {
    for (std::size_t i = 0; i < _n; ++i) {
      set(i, i);
    }
    for (std::size_t k = 0; k < _n; ++k) {
      for (std::size_t i = 0; i < _n; ++i) {
        if (i != k && test(i, k)) {
          or_row_into(i, k);
        }
      }
    }
  }

}  // namespace omegamon
