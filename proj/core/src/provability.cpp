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

#include "omegamon/provability.hpp"

#include <algorithm>
#include <unordered_map>

#include "omegamon/error.hpp"
#include "omegamon/words.hpp"

namespace omegamon {

  std::string InsertionProof::replay() const {
    std::string word = start;
    for (auto const& step : steps) {
      if (step.base.empty()) {
        throw InvalidArgument("insertion of an empty base");
      }
      if (step.position > word.size()) {
        throw InvalidArgument("insertion position " + std::to_string(step.position)
                              + " beyond word of length " + std::to_string(word.size()));
      }
      word.insert(step.position, repeat(step.base, n));
    }
    return word;
  }

  namespace {

    bool length_lex_less(std::string const& a, std::string const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    }

    void all_words(std::string_view alphabet, std::size_t length, std::string& prefix,
                   std::vector<std::string>& out) {
      if (prefix.size() == length) {
        out.push_back(prefix);
        return;
      }
      for (char c : alphabet) {
        prefix.push_back(c);
        all_words(alphabet, length, prefix, out);
        prefix.pop_back();
      }
    }

    bool is_subsequence(std::string_view small, std::string_view big) {
      std::size_t i = 0;
      for (char c : big) {
        if (i < small.size() && small[i] == c) {
          ++i;
        }
      }
      return i == small.size();
    }

  }  // namespace

  std::vector<std::string> successors(std::string_view word,
                                      unsigned         n,
                                      std::size_t      max_len,
                                      std::string_view alphabet) {
    if (n == 0) {
      throw InvalidArgument("n must be positive");
    }
    std::vector<std::string> out;
    for (std::size_t len = 1; word.size() + n * len <= max_len; ++len) {
      std::vector<std::string> bases;
      std::string              prefix;
      all_words(alphabet, len, prefix, bases);
      for (auto const& base : bases) {
        std::string const block = repeat(base, n);
        for (std::size_t pos = 0; pos <= word.size(); ++pos) {
          std::string next(word.substr(0, pos));
          next += block;
          next += word.substr(pos);
          out.push_back(std::move(next));
        }
      }
    }
    std::sort(out.begin(), out.end(), length_lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  ProvabilityResult provable_leq(std::string_view          u,
                                 std::string_view          v,
                                 unsigned                  n,
                                 ProvabilityOptions const& options) {
    if (n == 0) {
      throw InvalidArgument("n must be positive");
    }
    ProvabilityResult result;
    if (v.size() < u.size() || (v.size() - u.size()) % n != 0) {
      result.reason = "length difference is not a nonnegative multiple of n";
      return result;
    }
    auto const cu = letter_counts(u);
    auto const cv = letter_counts(v);
    for (std::size_t c = 0; c < 256; ++c) {
      if (cv.count[c] < cu.count[c] || (cv.count[c] - cu.count[c]) % n != 0) {
        result.reason = std::string("occurrences of '") + static_cast<char>(c)
                        + "' differ by a non-multiple of n";
        return result;
      }
    }
    if (!is_subsequence(u, v)) {
      result.reason = "the source is not a subsequence of the target";
      return result;
    }

    // Backward search: parent[w] is the word w came from by one deletion
    // together with the deletion performed.
    struct Origin {
      std::string   child;
      InsertionStep step;
    };
    std::unordered_map<std::string, Origin> origin;
    origin.emplace(std::string(v), Origin{});
    std::vector<std::string> level{std::string(v)};
    std::string const        target(u);
    bool                     found = target == v;
    while (!found && !level.empty()) {
      std::vector<std::string> next;
      for (auto const& word : level) {
        for (std::size_t pos = 0; pos < word.size() && !found; ++pos) {
          for (std::size_t len = 1; pos + n * len <= word.size(); ++len) {
            std::string_view const base(word.data() + pos, len);
            bool                   is_power = true;
            for (std::size_t r = 1; r < n && is_power; ++r) {
              is_power = word.compare(pos + r * len, len, base) == 0;
            }
            if (!is_power) {
              continue;
            }
            std::string smaller = word.substr(0, pos) + word.substr(pos + n * len);
            if (!is_subsequence(u, smaller)) {
              continue;
            }
            auto const [it, inserted]
                = origin.emplace(smaller, Origin{word, {pos, std::string(base)}});
            if (!inserted) {
              continue;
            }
            if (origin.size() > options.max_nodes) {
              throw BudgetExceeded("insertion search exceeds "
                                   + std::to_string(options.max_nodes) + " words");
            }
            if (smaller == target) {
              found = true;
              break;
            }
            next.push_back(std::move(smaller));
          }
        }
        if (found) {
          break;
        }
      }
      std::sort(next.begin(), next.end());
      level = std::move(next);
    }
    result.explored = origin.size();
    if (!found) {
      result.reason = "no sequence of insertions of n-th powers leads to the target";
      return result;
    }
    InsertionProof proof{target, {}, std::string(v), n};
    for (std::string word = target; word != v;) {
      auto const& o = origin.at(word);
      proof.steps.push_back(o.step);
      word = o.child;
    }
    result.provable = true;
    result.proof    = std::move(proof);
    return result;
  }

  namespace {

    std::string as_term(std::string_view word) {
      return word.empty() ? "1" : "(" + std::string(word) + ")";
    }

  }  // namespace

  std::vector<std::pair<std::string, Pseudoidentity>> consequence_equations(
      std::string_view u, std::string_view v, bool include_c) {
    std::string const U = as_term(u);
    std::string const V = as_term(v);
    std::vector<std::pair<std::string, Pseudoidentity>> out{
        {"a", equation(V + "^(w+1)", U + "^(w+1) " + V + "^w")},
        {"a", equation(V + "^(w+1)", V + "^w " + U + "^(w+1)")},
        {"b", equation(V + "^w", U + "^w " + V + "^w")},
        {"b", equation(V + "^w", V + "^w " + U + "^w")},
    };
    if (include_c) {
      out.emplace_back("c", equation(U + "^(w+1)", V + "^(w+1)"));
    }
    return out;
  }

  ConsequenceResult check_consequences(FiniteMonoid const& M,
                                       std::string_view    u,
                                       std::string_view    v,
                                       unsigned            n,
                                       CheckOptions const& options) {
    ConsequenceResult result;
    result.checked_c = provable_leq(v, u, n).provable;
    for (auto const& [item, eq] : consequence_equations(u, v, result.checked_c)) {
      auto const check = check_identity(M, eq, {}, options);
      if (!check.holds) {
        result.holds    = false;
        result.item     = item;
        result.identity = eq;
        result.witness  = check.witness;
        return result;
      }
    }
    return result;
  }

}  // namespace omegamon
