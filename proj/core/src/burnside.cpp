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

#include "omegamon/burnside.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "omegamon/error.hpp"

namespace omegamon {

  std::size_t BurnsideElementHash::operator()(BurnsideElement const& e) const noexcept {
    std::string_view const bytes(reinterpret_cast<char const*>(e.exponents.data()),
                                 e.exponents.size());
    return std::hash<std::string_view>{}(bytes);
  }

  BurnsideOracle::BurnsideOracle(std::string generators, unsigned n)
      : _generators(std::move(generators)), _n(n), _coordinates(0) {
    if (n == 0 || n > 3) {
      throw Unsupported("no Burnside oracle for exponent " + std::to_string(n)
                        + "; available exponents are 1, 2, 3");
    }
    std::string sorted = _generators;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidArgument("repeated generator in '" + _generators + "'");
    }
    std::size_t const k = _generators.size();
    if (n == 2) {
      _coordinates = k;
    } else if (n == 3) {
      std::size_t next = k;
      _pair_slot.assign(k * k, 0);
      _triple_slot.assign(k * k * k, 0);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          _pair_slot[i * k + j] = next++;
        }
      }
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          for (std::size_t l = j + 1; l < k; ++l) {
            _triple_slot[(i * k + j) * k + l] = next++;
          }
        }
      }
      _coordinates = next;
    }
  }

  std::uint64_t BurnsideOracle::order() const {
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < _coordinates; ++i) {
      if (result > UINT64_MAX / _n) {
        throw BudgetExceeded("|B(" + std::to_string(rank()) + ", " + std::to_string(_n)
                             + ")| exceeds 64 bits");
      }
      result *= _n;
    }
    return result;
  }

  BurnsideElement BurnsideOracle::identity() const {
    return {std::vector<std::uint8_t>(_coordinates, 0)};
  }

  BurnsideElement BurnsideOracle::generator(std::size_t i) const {
    if (i >= rank()) {
      throw InvalidArgument("generator index " + std::to_string(i) + " out of range");
    }
    BurnsideElement g = identity();
    multiply_generator(g, i);
    return g;
  }

  bool BurnsideOracle::is_identity(BurnsideElement const& a) const {
    check(a);
    return std::all_of(a.exponents.begin(), a.exponents.end(),
                       [](std::uint8_t e) { return e == 0; });
  }

  void BurnsideOracle::check(BurnsideElement const& a) const {
    if (a.exponents.size() != _coordinates) {
      throw InvalidArgument("element does not belong to B(" + std::to_string(rank()) + ", "
                            + std::to_string(_n) + ")");
    }
  }

  BurnsideElement BurnsideOracle::sigma(std::string_view word) const {
    BurnsideElement result = identity();
    for (char c : word) {
      auto const i = _generators.find(c);
      if (i == std::string::npos) {
        throw InvalidArgument(std::string("letter '") + c + "' is not a generator of '"
                              + _generators + "'");
      }
      multiply_generator(result, i);
    }
    return result;
  }

  void BurnsideOracle::add_triple(BurnsideElement& a,
                                  std::size_t      i,
                                  std::size_t      j,
                                  std::size_t      p,
                                  int              e) const {
    if (p == i || p == j) {
      return;  // [x, y, x] = [x, y, y] = 1 in exponent 3
    }
    std::size_t const k = rank();
    std::size_t       slot;
    int               sign = 1;
    if (p > j) {
      slot = _triple_slot[(i * k + j) * k + p];
    } else if (p > i) {
      slot = _triple_slot[(i * k + p) * k + j];
      sign = -1;
    } else {
      slot = _triple_slot[(p * k + i) * k + j];
    }
    int const value     = (a.exponents[slot] + sign * e) % 3;
    a.exponents[slot] = static_cast<std::uint8_t>((value + 3) % 3);
  }

  void BurnsideOracle::multiply_generator(BurnsideElement& a, std::size_t l) const {
    if (_n == 1) {
      return;
    }
    if (_n == 2) {
      a.exponents[l] ^= 1U;
      return;
    }
    std::size_t const k = rank();
    // Move a_l left across the commutator part: c a = a c [c, a].
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (int const f = a.exponents[_pair_slot[i * k + j]]; f != 0) {
          add_triple(a, i, j, l, f);
        }
      }
    }
    // Move a_l left across a_m^e (m > l): a_m^e a_l = a_l a_m^e [a_l, a_m]^-e.
    // The new commutator then moves right across the later a_p^e_p.
    for (std::size_t m = k; m-- > l + 1;) {
      int const e = a.exponents[m];
      if (e == 0) {
        continue;
      }
      int const f = 3 - e;
      for (std::size_t p = m + 1; p < k; ++p) {
        if (int const ep = a.exponents[p]; ep != 0) {
          add_triple(a, l, m, p, f * ep);
        }
      }
      auto& c = a.exponents[_pair_slot[l * k + m]];
      c       = static_cast<std::uint8_t>((c + f) % 3);
    }
    a.exponents[l] = static_cast<std::uint8_t>((a.exponents[l] + 1) % 3);
  }

  BurnsideElement BurnsideOracle::multiply(BurnsideElement const& a,
                                           BurnsideElement const& b) const {
    check(a);
    check(b);
    BurnsideElement   result = a;
    std::size_t const k      = rank();
    if (_n == 2) {
      for (std::size_t i = 0; i < k; ++i) {
        result.exponents[i] ^= b.exponents[i];
      }
      return result;
    }
    if (_n == 1) {
      return result;
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (int r = 0; r < b.exponents[i]; ++r) {
        multiply_generator(result, i);
      }
    }
    // [a_i, a_j] = a_i^2 a_j^2 a_i a_j.
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        for (int r = 0; r < b.exponents[_pair_slot[i * k + j]]; ++r) {
          for (std::size_t g : {i, i, j, j, i, j}) {
            multiply_generator(result, g);
          }
        }
      }
    }
    for (std::size_t s = k + k * (k - 1) / 2; s < _coordinates; ++s) {
      result.exponents[s] = static_cast<std::uint8_t>((result.exponents[s] + b.exponents[s]) % 3);
    }
    return result;
  }

  BurnsideElement BurnsideOracle::power(BurnsideElement const& a, std::uint64_t e) const {
    check(a);
    BurnsideElement result = identity();
    BurnsideElement base   = a;
    while (e != 0) {
      if ((e & 1U) != 0) {
        result = multiply(result, base);
      }
      base = multiply(base, base);
      e >>= 1U;
    }
    return result;
  }

  BurnsideElement BurnsideOracle::inverse(BurnsideElement const& a) const {
    return power(a, _n - 1);
  }

  std::string BurnsideOracle::to_string(BurnsideElement const& a) const {
    check(a);
    std::string       out;
    std::size_t const k      = rank();
    auto              append = [&](std::string const& atom, int e) {
      if (e == 0) {
        return;
      }
      if (!out.empty()) {
        out.push_back(' ');
      }
      out += atom;
      if (e != 1) {
        out += "^" + std::to_string(e);
      }
    };
    for (std::size_t i = 0; i < std::min(k, _coordinates); ++i) {
      append(std::string(1, _generators[i]), a.exponents[i]);
    }
    if (_n == 3) {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          append(std::string{'[', _generators[i], ',', _generators[j], ']'},
                 a.exponents[_pair_slot[i * k + j]]);
        }
      }
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          for (std::size_t l = j + 1; l < k; ++l) {
            append(std::string{'[', _generators[i], ',', _generators[j], ',',
                               _generators[l], ']'},
                   a.exponents[_triple_slot[(i * k + j) * k + l]]);
          }
        }
      }
    }
    return out.empty() ? "1" : out;
  }

  std::vector<BurnsideElement> BurnsideOracle::enumerate(std::size_t cap) const {
    std::vector<BurnsideElement>                             elements{identity()};
    std::unordered_set<BurnsideElement, BurnsideElementHash> seen{identity()};
    for (std::size_t pos = 0; pos < elements.size(); ++pos) {
      for (std::size_t i = 0; i < rank(); ++i) {
        BurnsideElement next = elements[pos];
        multiply_generator(next, i);
        if (seen.insert(next).second) {
          if (elements.size() >= cap) {
            throw BudgetExceeded("B(" + std::to_string(rank()) + ", " + std::to_string(_n)
                                 + ") has more than " + std::to_string(cap) + " elements");
          }
          elements.push_back(std::move(next));
        }
      }
    }
    return elements;
  }

}  // namespace omegamon
