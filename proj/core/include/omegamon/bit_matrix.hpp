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

#ifndef OMEGAMON_BIT_MATRIX_HPP_
#define OMEGAMON_BIT_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace omegamon {

  // Square boolean matrix stored row-major in 64-bit words.
  class BitMatrix {
   public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n);

    std::size_t size() const noexcept {
      return _n;
    }

    bool test(std::size_t i, std::size_t j) const noexcept {
      return (_bits[i * _words + (j >> 6)] >> (j & 63)) & 1U;
    }

    void set(std::size_t i, std::size_t j) noexcept {
      _bits[i * _words + (j >> 6)] |= std::uint64_t(1) << (j & 63);
    }

    void reset(std::size_t i, std::size_t j) noexcept {
      _bits[i * _words + (j >> 6)] &= ~(std::uint64_t(1) << (j & 63));
    }

    // row(i) |= row(j); returns true if row(i) changed.
    bool or_row_into(std::size_t i, std::size_t j) noexcept;

    // True iff row(i) is contained in row(j).
    bool row_subset(std::size_t i, std::size_t j) const noexcept;

    // Number of set entries.
    std::size_t count() const noexcept;

    // In-place reflexive-transitive closure (Warshall).
    void transitive_closure() noexcept;

    bool operator==(BitMatrix const&) const = default;

   private:
    std::size_t                _n     = 0;
    std::size_t                _words = 0;
    std::vector<std::uint64_t> _bits;
  };

}  // namespace omegamon

#endif  // OMEGAMON_BIT_MATRIX_HPP_
