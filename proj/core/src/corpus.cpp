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

#include "omegamon/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "omegamon/error.hpp"

namespace omegamon {

  namespace {

    std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    }

    // Words having `sub` as a scattered subword.
    Dfa subword_ideal(std::string const& alphabet, std::string const& sub) {
      std::size_t const    k = alphabet.size();
      std::size_t const    n = sub.size() + 1;
      std::vector<bool>    finals(n, false);
      std::vector<state_t> delta(n * k);
      finals[n - 1] = true;
      for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t a = 0; a < k; ++a) {
          bool const advance = q + 1 < n && sub[q] == alphabet[a];
          delta[q * k + a]   = static_cast<state_t>(advance ? q + 1 : q);
        }
      }
      return Dfa(alphabet, n, 0, std::move(finals), std::move(delta));
    }

    // Words with |w|_letter = r (mod m).
    Dfa count_mod(std::string const& alphabet, char letter, std::size_t m, std::size_t r) {
      std::size_t const    k = alphabet.size();
      std::vector<bool>    finals(m, false);
      std::vector<state_t> delta(m * k);
      finals[r] = true;
      for (std::size_t q = 0; q < m; ++q) {
        for (std::size_t a = 0; a < k; ++a) {
          delta[q * k + a] = static_cast<state_t>(alphabet[a] == letter ? (q + 1) % m : q);
        }
      }
      return Dfa(alphabet, m, 0, std::move(finals), std::move(delta));
    }

    template <typename Draw>
    std::vector<FiniteMonoid> corpus(std::size_t count, std::uint64_t seed, Draw&& draw) {
      std::mt19937_64           rng(seed);
      std::vector<FiniteMonoid> out;
      out.reserve(count);
      for (std::size_t i = 0; i < count; ++i) {
        out.push_back(draw(rng));
      }
      return out;
    }

  }  // namespace

  Transformation random_transformation(std::mt19937_64& rng, std::size_t degree) {
    // Pick a rank, an image set of that size, then map onto it.
    std::size_t const          rank = uniform(rng, 1, degree);
    std::vector<std::uint32_t> points(degree);
    std::iota(points.begin(), points.end(), 0U);
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<std::uint32_t> images(degree);
    for (auto& x : images) {
      x = points[uniform(rng, 0, rank - 1)];
    }
    return Transformation(std::move(images));
  }

  Transformation random_permutation(std::mt19937_64& rng, std::size_t degree) {
    std::vector<std::uint32_t> images(degree);
    std::iota(images.begin(), images.end(), 0U);
    std::shuffle(images.begin(), images.end(), rng);
    return Transformation(std::move(images));
  }

  namespace {

    template <typename Gen>
    FiniteMonoid random_monoid(std::mt19937_64& rng, CorpusOptions const& options, Gen&& gen) {
      MonoidLimits limits;
      limits.max_elements = options.max_elements;
      for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
        std::size_t const           degree = uniform(rng, 1, options.max_degree);
        std::size_t const           count  = uniform(rng, 1, options.max_generators);
        std::vector<Transformation> gens;
        for (std::size_t i = 0; i < count; ++i) {
          gens.push_back(gen(rng, degree));
        }
        try {
          return from_generators(gens, {}, limits);
        } catch (BudgetExceeded const&) {
          continue;
        }
      }
      throw BudgetExceeded("no random monoid within " + std::to_string(options.max_elements)
                           + " elements after " + std::to_string(options.max_attempts)
                           + " attempts");
    }

  }  // namespace

  FiniteMonoid random_transformation_monoid(std::mt19937_64& rng, CorpusOptions const& options) {
    return random_monoid(rng, options, random_transformation);
  }

  FiniteMonoid random_permutation_group(std::mt19937_64& rng, CorpusOptions const& options) {
    return random_monoid(rng, options, random_permutation);
  }

  std::vector<FiniteMonoid> transformation_corpus(std::size_t          count,
                                                  std::uint64_t        seed,
                                                  CorpusOptions const& options) {
    return corpus(count, seed,
                  [&](std::mt19937_64& rng) { return random_transformation_monoid(rng, options); });
  }

  std::vector<FiniteMonoid> group_corpus(std::size_t          count,
                                         std::uint64_t        seed,
                                         CorpusOptions const& options) {
    return corpus(count, seed,
                  [&](std::mt19937_64& rng) { return random_permutation_group(rng, options); });
  }

  Dfa random_dfa(std::mt19937_64& rng, std::size_t states, std::string alphabet) {
    if (states == 0 || alphabet.empty()) {
      throw InvalidArgument("random_dfa needs states and letters");
    }
    std::size_t const    k = alphabet.size();
    std::vector<bool>    finals(states);
    std::vector<state_t> delta(states * k);
    for (std::size_t q = 0; q < states; ++q) {
      finals[q] = uniform(rng, 0, 1) == 1;
      for (std::size_t a = 0; a < k; ++a) {
        delta[q * k + a] = static_cast<state_t>(uniform(rng, 0, states - 1));
      }
    }
    return Dfa(std::move(alphabet), states, 0, std::move(finals), std::move(delta));
  }

  Dfa random_power_closed_language(std::mt19937_64& rng, std::string alphabet, unsigned n) {
    if (alphabet.empty() || n == 0) {
      throw InvalidArgument("random_power_closed_language needs letters and n >= 1");
    }
    std::vector<std::size_t> divisors;
    for (std::size_t m = 2; m <= n; ++m) {
      if (n % m == 0) {
        divisors.push_back(m);
      }
    }
    auto atom = [&]() {
      if (divisors.empty() || uniform(rng, 0, 2) != 0) {
        return subword_ideal(alphabet, random_word(rng, alphabet, uniform(rng, 1, 3)));
      }
      std::size_t const m      = divisors[uniform(rng, 0, divisors.size() - 1)];
      char const        letter = alphabet[uniform(rng, 0, alphabet.size() - 1)];
      std::size_t const r      = uniform(rng, 0, m - 1);
      return count_mod(alphabet, letter, m, r);
    };
    Dfa               result = Dfa::empty_language(alphabet);
    std::size_t const terms  = uniform(rng, 1, 3);
    for (std::size_t i = 0; i < terms; ++i) {
      Dfa               conj    = atom();
      std::size_t const factors = uniform(rng, 0, 1);
      for (std::size_t j = 0; j < factors; ++j) {
        conj = intersection(conj, atom());
      }
      result = union_of(result, conj);
    }
    return minimize(result);
  }

  std::string random_word(std::mt19937_64& rng, std::string_view alphabet, std::size_t length) {
    std::string w(length, ' ');
    for (auto& c : w) {
      c = alphabet[uniform(rng, 0, alphabet.size() - 1)];
    }
    return w;
  }

}  // namespace omegamon
