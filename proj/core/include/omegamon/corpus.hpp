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

#ifndef OMEGAMON_CORPUS_HPP_
#define OMEGAMON_CORPUS_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "omegamon/dfa.hpp"
#include "omegamon/monoid.hpp"

namespace omegamon {

  // Seeded generators of test material.  All randomness flows from a
  // std::mt19937_64, so equal seeds give equal corpora.
  struct CorpusOptions {
    std::size_t max_degree     = 8;
    std::size_t max_generators = 3;
    std::size_t max_elements   = 300;
    // Draws per monoid before giving up on the element cap.
    std::size_t max_attempts = 1000;
  };

  Transformation random_transformation(std::mt19937_64& rng, std::size_t degree);
  Transformation random_permutation(std::mt19937_64& rng, std::size_t degree);

  // Random transformation monoid within the element cap.  Generator images
  // are drawn with random rank, so idempotent-rich and group-rich monoids
  // both occur.
  FiniteMonoid random_transformation_monoid(std::mt19937_64& rng, CorpusOptions const& options = {});
  FiniteMonoid random_permutation_group(std::mt19937_64& rng, CorpusOptions const& options = {});

  std::vector<FiniteMonoid> transformation_corpus(std::size_t          count,
                                                  std::uint64_t        seed,
                                                  CorpusOptions const& options = {});
  std::vector<FiniteMonoid> group_corpus(std::size_t          count,
                                         std::uint64_t        seed,
                                         CorpusOptions const& options = {});

  // Complete DFA with uniformly random transitions and final states.
  Dfa random_dfa(std::mt19937_64& rng, std::size_t states, std::string alphabet);

  // A random union of intersections of languages recognised by ordered
  // monoids satisfying 1 <= x^n: subword ideals A* a1 A* ... ak A* and
  // letter counts |w|_a = r (mod m) with m dividing n.
  Dfa random_power_closed_language(std::mt19937_64& rng, std::string alphabet, unsigned n);

  std::string random_word(std::mt19937_64& rng, std::string_view alphabet, std::size_t length);

}  // namespace omegamon

#endif  // OMEGAMON_CORPUS_HPP_
