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

#ifndef OMEGAMON_GREEN_HPP_
#define OMEGAMON_GREEN_HPP_

#include <cstddef>
#include <vector>

#include "omegamon/monoid.hpp"

namespace omegamon {

  // Green's relations of a finite monoid as partitions of its elements.
  // Class labels are numbered by first occurrence in element order.
  struct GreenData {
    std::vector<std::size_t> r_class;
    std::vector<std::size_t> l_class;
    std::vector<std::size_t> j_class;
    std::vector<std::size_t> h_class;
    std::size_t              r_count = 0;
    std::size_t              l_count = 0;
    std::size_t              j_count = 0;
    std::size_t              h_count = 0;

    std::vector<bool>        idempotent;
    // Number of idempotents in each R-, L- and J-class.
    std::vector<std::size_t> r_idempotents;
    std::vector<std::size_t> l_idempotents;
    std::vector<std::size_t> j_idempotents;

    bool is_j_trivial() const noexcept {
      return j_count == r_class.size();
    }

    // A J-class is regular iff it contains an idempotent.
    std::size_t regular_j_class_count() const noexcept;

    // True iff every R-class and every L-class holds at most one idempotent.
    bool at_most_one_idempotent_per_r_and_l_class() const noexcept;

    // Members of J-class c in element order.
    std::vector<element_t> j_class_members(std::size_t c) const;
  };

  // R from mutual reachability in the right Cayley graph, L in the left one,
  // J in their union, H = R meet L.
  GreenData green_data(FiniteMonoid const& M);

}  // namespace omegamon

#endif  // OMEGAMON_GREEN_HPP_
