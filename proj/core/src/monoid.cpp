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

#include "omegamon/monoid.hpp"

#include <cstdlib>
#include <limits>
#include <unordered_map>

#include "omegamon/error.hpp"

namespace omegamon {

  namespace {
    constexpr std::string_view default_letters = "abcdefghijklmnopqrstuvwxyz";

    std::vector<bool> reachable_from_identity(std::size_t               n,
                                              std::vector<element_t> const& table,
                                              element_t                 identity,
                                              std::vector<element_t> const& gens) {
      std::vector<bool>      seen(n, false);
      std::vector<element_t> queue{identity};
      seen[identity] = true;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (auto g : gens) {
          element_t const next = table[static_cast<std::size_t>(queue[i]) * n + g];
          if (!seen[next]) {
            seen[next] = true;
            queue.push_back(next);
          }
        }
      }
      return seen;
    }
  }  // namespace

  std::size_t MonoidLimits::default_memory_budget() {
    std::size_t budget = std::size_t(3) << 29;  // 1.5 GB
    if (char const* env = std::getenv("OMEGAMON_MEMORY_BUDGET")) {
      char*                    end   = nullptr;
      unsigned long long const value = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && value > 0) {
        budget = static_cast<std::size_t>(value);
      }
    }
    return budget;
  }

  void check_table_budget(std::size_t n, MonoidLimits const& limits) {
    if (n > limits.max_elements) {
      throw BudgetExceeded("monoid has more than " + std::to_string(limits.max_elements)
                           + " elements");
    }
    long double const bytes = static_cast<long double>(n) * n * sizeof(element_t);
    if (bytes > static_cast<long double>(limits.memory_budget)) {
      throw BudgetExceeded("a " + std::to_string(n) + "-element multiplication table needs "
                           + std::to_string(static_cast<unsigned long long>(bytes))
                           + " bytes, over the memory budget of "
                           + std::to_string(limits.memory_budget));
    }
  }

  FiniteMonoid::FiniteMonoid(std::size_t              size,
                             std::vector<element_t>   table,
                             element_t                identity,
                             std::vector<element_t>   generators,
                             std::vector<std::string> labels)
      : _size(size),
        _table(std::move(table)),
        _identity(identity),
        _generators(std::move(generators)),
        _labels(std::move(labels)) {
    if (_size == 0) {
      throw InvalidArgument("a monoid has at least one element");
    }
    if (_size > std::numeric_limits<element_t>::max()) {
      throw InvalidArgument("monoid too large for 32-bit element indices");
    }
    if (_table.size() != _size * _size) {
      throw InvalidArgument("multiplication table has " + std::to_string(_table.size())
                            + " entries, expected " + std::to_string(_size * _size));
    }
    for (auto x : _table) {
      if (x >= _size) {
        throw InvalidArgument("table entry " + std::to_string(x) + " out of range");
      }
    }
    if (_identity >= _size) {
      throw InvalidArgument("identity index out of range");
    }
    for (element_t s = 0; s < _size; ++s) {
      if (product(_identity, s) != s || product(s, _identity) != s) {
        throw InvalidArgument("element " + std::to_string(_identity)
                              + " is not an identity: fails at " + std::to_string(s));
      }
    }
    for (auto g : _generators) {
      if (g >= _size) {
        throw InvalidArgument("generator index out of range");
      }
    }
    if (!_labels.empty() && _labels.size() != _size) {
      throw InvalidArgument("label count does not match monoid size");
    }
    auto const seen = reachable_from_identity(_size, _table, _identity, _generators);
    for (element_t s = 0; s < _size; ++s) {
      if (!seen[s]) {
        throw InvalidArgument("element " + std::to_string(s)
                              + " is not a product of the generators");
      }
    }
    compute_power_data();
  }

  FiniteMonoid FiniteMonoid::trivial() {
    return FiniteMonoid(1, {0}, 0, {}, {""});
  }

  FiniteMonoid FiniteMonoid::cyclic_group(std::size_t k) {
    if (k == 0) {
      throw InvalidArgument("cyclic group order must be >= 1");
    }
    std::vector<element_t>   table(k * k);
    std::vector<std::string> labels(k);
    for (std::size_t i = 0; i < k; ++i) {
      labels[i] = std::string(i, 'g');
      for (std::size_t j = 0; j < k; ++j) {
        table[i * k + j] = static_cast<element_t>((i + j) % k);
      }
    }
    std::vector<element_t> gens;
    if (k > 1) {
      gens.push_back(1);
    }
    return FiniteMonoid(k, std::move(table), 0, std::move(gens), std::move(labels));
  }

  FiniteMonoid FiniteMonoid::monogenic(std::size_t index, std::size_t period) {
    if (index == 0 || period == 0) {
      throw InvalidArgument("monogenic monoid needs index >= 1 and period >= 1");
    }
    std::size_t const n = index + period;  // 1, a, ..., a^(index + period - 1)
    auto reduce = [&](std::size_t e) {
      return e < index + period ? e : index + (e - index) % period;
    };
    std::vector<element_t>   table(n * n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = std::string(i, 'a');
      for (std::size_t j = 0; j < n; ++j) {
        table[i * n + j] = static_cast<element_t>(reduce(i + j));
      }
    }
    return FiniteMonoid(n, std::move(table), 0, {1}, std::move(labels));
  }

  std::string FiniteMonoid::label(element_t s) const {
    if (_labels.empty()) {
      return "#" + std::to_string(s);
    }
    return _labels[s].empty() ? "1" : _labels[s];
  }

  std::vector<element_t> FiniteMonoid::idempotents() const {
    std::vector<element_t> result;
    for (element_t s = 0; s < _size; ++s) {
      if (is_idempotent(s)) {
        result.push_back(s);
      }
    }
    return result;
  }

  element_t FiniteMonoid::power(element_t s, std::uint64_t e) const noexcept {
    element_t result = _identity;
    element_t base   = s;
    while (e > 0) {
      if (e & 1U) {
        result = product(result, base);
      }
      e >>= 1U;
      if (e > 0) {
        base = product(base, base);
      }
    }
    return result;
  }

  void FiniteMonoid::compute_power_data() {
    _index.resize(_size);
    _period.resize(_size);
    _omega.resize(_size);
    for (element_t s = 0; s < _size; ++s) {
      // Floyd cycle detection on x_j = s^(j + 1), x_(j + 1) = x_j s.
      auto      next     = [&](element_t x) { return product(x, s); };
      element_t tortoise = next(s);
      element_t hare     = next(next(s));
      while (tortoise != hare) {
        tortoise = next(tortoise);
        hare     = next(next(hare));
      }
      std::size_t mu = 0;
      tortoise       = s;
      while (tortoise != hare) {
        tortoise = next(tortoise);
        hare     = next(hare);
        ++mu;
      }
      std::size_t lambda = 1;
      hare               = next(tortoise);
      while (tortoise != hare) {
        hare = next(hare);
        ++lambda;
      }
      std::size_t const index = mu + 1;
      std::size_t const e     = lambda * ((index + lambda - 1) / lambda);
      _index[s]               = static_cast<std::uint32_t>(index);
      _period[s]              = static_cast<std::uint32_t>(lambda);
      _omega[s]               = power(s, e);
    }
  }

  element_t FiniteMonoid::omega_power(element_t s, std::int64_t k) const noexcept {
    auto const p = static_cast<std::int64_t>(_period[s]);
    auto const r = ((k % p) + p) % p;
    if (r == 0) {
      return _omega[s];
    }
    return product(_omega[s], power(s, static_cast<std::uint64_t>(r)));
  }

  element_t FiniteMonoid::evaluate(std::span<std::size_t const> word) const {
    element_t result = _identity;
    for (auto i : word) {
      if (i >= _generators.size()) {
        throw InvalidArgument("generator position out of range");
      }
      result = product(result, _generators[i]);
    }
    return result;
  }

  bool FiniteMonoid::is_group() const noexcept {
    for (element_t s = 0; s < _size; ++s) {
      if (s != _identity && is_idempotent(s)) {
        return false;
      }
    }
    return true;
  }

  bool is_associative(FiniteMonoid const& M) {
    std::size_t const n = M.size();
    if (n <= 500) {
      for (element_t x = 0; x < n; ++x) {
        for (element_t y = 0; y < n; ++y) {
          element_t const xy = M.product(x, y);
          for (element_t z = 0; z < n; ++z) {
            if (M.product(xy, z) != M.product(x, M.product(y, z))) {
              return false;
            }
          }
        }
      }
      return true;
    }
    // Light's test: the elements y with (x y) z = x (y z) for all x, z form a
    // submonoid, so checking generators suffices.
    for (auto g : M.generators()) {
      for (element_t x = 0; x < n; ++x) {
        element_t const xg = M.product(x, g);
        for (element_t z = 0; z < n; ++z) {
          if (M.product(xg, z) != M.product(x, M.product(g, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  namespace {
    // Dense table of a monoid given by its right Cayley graph on k
    // generators, where every element t != 0 is parent[t] * gen[last[t]] with
    // parent[t] < t, and element 0 is the identity.
    std::vector<element_t> table_from_cayley(std::size_t                   n,
                                             std::size_t                   k,
                                             std::vector<element_t> const& right,
                                             std::vector<element_t> const& parent,
                                             std::vector<std::size_t> const& last) {
      std::vector<element_t> table(n * n);
      for (std::size_t s = 0; s < n; ++s) {
        element_t* row = table.data() + s * n;
        row[0]         = static_cast<element_t>(s);
        for (std::size_t t = 1; t < n; ++t) {
          row[t] = right[static_cast<std::size_t>(row[parent[t]]) * k + last[t]];
        }
      }
      return table;
    }
  }  // namespace

  TransformationMonoid transformation_monoid(std::vector<Transformation> const& gens,
                                             std::string_view                   letters,
                                             MonoidLimits const&                limits) {
    if (gens.empty()) {
      throw InvalidArgument("at least one generator is required");
    }
    std::size_t const degree = gens.front().degree();
    if (degree == 0) {
      throw InvalidArgument("generator degree must be >= 1");
    }
    for (auto const& g : gens) {
      if (g.degree() != degree) {
        throw InvalidArgument("generators have mismatched degrees "
                              + std::to_string(degree) + " and "
                              + std::to_string(g.degree()));
      }
    }
    if (letters.empty()) {
      letters = default_letters;
    }
    if (letters.size() < gens.size()) {
      throw InvalidArgument("not enough letters to label the generators");
    }
    std::size_t const k = gens.size();

    std::vector<Transformation> elements{Transformation::identity(degree)};
    std::unordered_map<Transformation, element_t, TransformationHash> index;
    index.emplace(elements.front(), 0);
    std::vector<element_t>   right;
    std::vector<element_t>   parent{0};
    std::vector<std::size_t> last{0};
    std::vector<std::string> labels{""};

    for (std::size_t s = 0; s < elements.size(); ++s) {
      for (std::size_t i = 0; i < k; ++i) {
        Transformation next = elements[s] * gens[i];
        auto           it   = index.find(next);
        if (it == index.end()) {
          if (elements.size() >= limits.max_elements) {
            throw BudgetExceeded("transformation monoid exceeds "
                                 + std::to_string(limits.max_elements) + " elements");
          }
          auto const id = static_cast<element_t>(elements.size());
          it            = index.emplace(next, id).first;
          elements.push_back(std::move(next));
          parent.push_back(static_cast<element_t>(s));
          last.push_back(i);
          labels.push_back(labels[s] + letters[i]);
        }
        right.push_back(it->second);
      }
    }
    std::size_t const n = elements.size();
    check_table_budget(n, limits);
    auto table = table_from_cayley(n, k, right, parent, last);
    std::vector<element_t> generators(right.begin(), right.begin() + k);
    return {FiniteMonoid(n, std::move(table), 0, std::move(generators), std::move(labels)),
            std::move(elements)};
  }

  FiniteMonoid from_generators(std::vector<Transformation> const& gens,
                               std::string_view                   letters,
                               MonoidLimits const&                limits) {
    return transformation_monoid(gens, letters, limits).monoid;
  }

  Submonoid submonoid(FiniteMonoid const&        M,
                      std::span<element_t const> gens,
                      MonoidLimits const&        limits) {
    for (auto g : gens) {
      if (g >= M.size()) {
        throw InvalidArgument("submonoid generator out of range");
      }
    }
    std::size_t const      k = gens.size();
    std::vector<element_t> to_parent{M.identity()};
    std::vector<element_t> local(M.size(), static_cast<element_t>(-1));
    local[M.identity()] = 0;
    std::vector<element_t>   right;
    std::vector<element_t>   parent{0};
    std::vector<std::size_t> last{0};
    for (std::size_t s = 0; s < to_parent.size(); ++s) {
      for (std::size_t i = 0; i < k; ++i) {
        element_t const p = M.product(to_parent[s], gens[i]);
        if (local[p] == static_cast<element_t>(-1)) {
          local[p] = static_cast<element_t>(to_parent.size());
          to_parent.push_back(p);
          parent.push_back(static_cast<element_t>(s));
          last.push_back(i);
        }
        right.push_back(local[p]);
      }
    }
    std::size_t const n = to_parent.size();
    check_table_budget(n, limits);
    std::vector<element_t> table;
    if (k == 0) {
      table = {0};
    } else {
      table = table_from_cayley(n, k, right, parent, last);
    }
    std::vector<element_t> generators;
    for (auto g : gens) {
      generators.push_back(local[g]);
    }
    std::vector<std::string> labels;
    if (M.has_labels()) {
      for (auto p : to_parent) {
        labels.push_back(M.labels()[p]);
      }
    }
    return {FiniteMonoid(n, std::move(table), 0, std::move(generators), std::move(labels)),
            std::move(to_parent)};
  }

}  // namespace omegamon
