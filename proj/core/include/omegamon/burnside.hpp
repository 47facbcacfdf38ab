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

#ifndef OMEGAMON_BURNSIDE_HPP_
#define OMEGAMON_BURNSIDE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace omegamon {

  // Exponent vector of a normal form.  For exponent 2 one bit per generator;
  // for exponent 3 the exponents (mod 3) of
  //   a_1 ... a_k,  [a_i, a_j] (i < j),  [a_i, a_j, a_l] (i < j < l)
  // in that order, with [x, y] = x^-1 y^-1 x y and [x, y, z] = [[x, y], z].
  // The normal form is the product of these powers in coordinate order.
  struct BurnsideElement {
    std::vector<std::uint8_t> exponents;

    bool operator==(BurnsideElement const&) const = default;
  };

  struct BurnsideElementHash {
    std::size_t operator()(BurnsideElement const& e) const noexcept;
  };

  // The free Burnside group B(k, n) for n in {1, 2, 3} on an ordered list of
  // single-letter generators.  Other exponents throw Unsupported.
  class BurnsideOracle {
   public:
    BurnsideOracle(std::string generators, unsigned n);

    std::string const& generators() const noexcept {
      return _generators;
    }

    std::size_t rank() const noexcept {
      return _generators.size();
    }

    unsigned exponent() const noexcept {
      return _n;
    }

    std::size_t coordinate_count() const noexcept {
      return _coordinates;
    }

    // |B(k, n)|; throws BudgetExceeded if it does not fit in 64 bits.
    std::uint64_t order() const;

    BurnsideElement identity() const;
    BurnsideElement generator(std::size_t i) const;
    bool            is_identity(BurnsideElement const& a) const;

    // Image of a word over the generators.
    BurnsideElement sigma(std::string_view word) const;

    // a := a * generator(i), in place.
    void multiply_generator(BurnsideElement& a, std::size_t i) const;

    BurnsideElement multiply(BurnsideElement const& a, BurnsideElement const& b) const;
    BurnsideElement inverse(BurnsideElement const& a) const;
    BurnsideElement power(BurnsideElement const& a, std::uint64_t e) const;

    // Readable normal form such as "x^2 y [x,y]^2 [x,y,z]", "1" for the
    // identity.
    std::string to_string(BurnsideElement const& a) const;

    // All elements, by breadth-first closure under right multiplication by
    // generators.  Throws BudgetExceeded past `cap`.
    std::vector<BurnsideElement> enumerate(std::size_t cap = 1'000'000) const;

   private:
    void check(BurnsideElement const& a) const;
    // Add e * [a_i, a_j, a_p] (i < j, any p) to the central coordinates.
    void add_triple(BurnsideElement& a, std::size_t i, std::size_t j, std::size_t p,
                    int e) const;

    std::string _generators;
    unsigned    _n;
    std::size_t _coordinates;
    std::vector<std::size_t> _pair_slot;    // i * k + j -> coordinate
    std::vector<std::size_t> _triple_slot;  // (i * k + j) * k + l -> coordinate
  };

}  // namespace omegamon

#endif  // OMEGAMON_BURNSIDE_HPP_
