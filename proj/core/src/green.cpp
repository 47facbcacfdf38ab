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

#include "omegamon/green.hpp"

#include <algorithm>
#include <map>

namespace omegamon {

  namespace {
    // Strongly connected components (iterative Tarjan), relabelled by first
    // occurrence in vertex order.
    std::vector<std::size_t>
    components(std::vector<std::vector<element_t>> const& adj, std::size_t& count) {
      std::size_t const        n = adj.size();
      constexpr std::size_t    unset = static_cast<std::size_t>(-1);
      std::vector<std::size_t> idx(n, unset), low(n, 0), comp(n, unset);
      std::vector<bool>        on_stack(n, false);
      std::vector<element_t>   stack;
      std::vector<std::pair<element_t, std::size_t>> call;
      std::size_t              next_index = 0;
      std::size_t              raw_count  = 0;

      for (element_t root = 0; root < n; ++root) {
        if (idx[root] != unset) {
          continue;
        }
        call.emplace_back(root, 0);
        idx[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
          auto& [v, edge] = call.back();
          if (edge < adj[v].size()) {
            element_t const w = adj[v][edge++];
            if (idx[w] == unset) {
              idx[w] = low[w] = next_index++;
              stack.push_back(w);
              on_stack[w] = true;
              call.emplace_back(w, 0);
            } else if (on_stack[w]) {
              low[v] = std::min(low[v], idx[w]);
            }
            continue;
          }
          if (low[v] == idx[v]) {
            element_t w;
            do {
              w = stack.back();
              stack.pop_back();
              on_stack[w] = false;
              comp[w]     = raw_count;
            } while (w != v);
            ++raw_count;
          }
          element_t const done = v;
          call.pop_back();
          if (!call.empty()) {
            element_t const parent = call.back().first;
            low[parent]            = std::min(low[parent], low[done]);
          }
        }
      }
      std::vector<std::size_t> relabel(raw_count, unset);
      count = 0;
      for (auto& c : comp) {
        if (relabel[c] == unset) {
          relabel[c] = count++;
        }
        c = relabel[c];
      }
      return comp;
    }
  }  // namespace

  std::size_t GreenData::regular_j_class_count() const noexcept {
    std::size_t result = 0;
    for (auto c : j_idempotents) {
      result += c > 0 ? 1 : 0;
    }
    return result;
  }

  bool GreenData::at_most_one_idempotent_per_r_and_l_class() const noexcept {
    return std::all_of(r_idempotents.begin(), r_idempotents.end(),
                       [](std::size_t c) { return c <= 1; })
           && std::all_of(l_idempotents.begin(), l_idempotents.end(),
                          [](std::size_t c) { return c <= 1; });
  }

  std::vector<element_t> GreenData::j_class_members(std::size_t c) const {
    std::vector<element_t> result;
    for (element_t s = 0; s < j_class.size(); ++s) {
      if (j_class[s] == c) {
        result.push_back(s);
      }
    }
    return result;
  }

  GreenData green_data(FiniteMonoid const& M) {
    std::size_t const                   n = M.size();
    std::vector<std::vector<element_t>> right(n), left(n), both(n);
    for (element_t s = 0; s < n; ++s) {
      for (auto g : M.generators()) {
        right[s].push_back(M.product(s, g));
        left[s].push_back(M.product(g, s));
      }
      both[s] = right[s];
      both[s].insert(both[s].end(), left[s].begin(), left[s].end());
    }

    GreenData d;
    d.r_class = components(right, d.r_count);
    d.l_class = components(left, d.l_count);
    d.j_class = components(both, d.j_count);

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> h_ids;
    d.h_class.resize(n);
    for (element_t s = 0; s < n; ++s) {
      auto const key = std::make_pair(d.r_class[s], d.l_class[s]);
      auto       it  = h_ids.try_emplace(key, h_ids.size()).first;
      d.h_class[s]   = it->second;
    }
    d.h_count = h_ids.size();

    d.idempotent.resize(n);
    d.r_idempotents.assign(d.r_count, 0);
    d.l_idempotents.assign(d.l_count, 0);
    d.j_idempotents.assign(d.j_count, 0);
    for (element_t s = 0; s < n; ++s) {
      d.idempotent[s] = M.is_idempotent(s);
      if (d.idempotent[s]) {
        ++d.r_idempotents[d.r_class[s]];
        ++d.l_idempotents[d.l_class[s]];
        ++d.j_idempotents[d.j_class[s]];
      }
    }
    return d;
  }

}  // namespace omegamon
