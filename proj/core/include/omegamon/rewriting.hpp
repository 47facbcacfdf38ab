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

#ifndef OMEGAMON_REWRITING_HPP_
#define OMEGAMON_REWRITING_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace omegamon {

  // Shortlex order on words over `symbols`, where earlier symbols are
  // smaller.
  class ShortlexOrder {
   public:
    explicit ShortlexOrder(std::string symbols);

    std::string const& symbols() const noexcept {
      return _symbols;
    }

    bool less(std::string_view a, std::string_view b) const;

   private:
    std::string _symbols;
    int         _rank[256];
  };

  struct CompletionLimits {
    std::size_t max_rules       = 20'000;
    std::size_t max_rule_length = 64;
  };

  // A string rewriting system completed by the Knuth-Bendix procedure under
  // a shortlex order.
  class RewritingSystem {
   public:
    using Rule = std::pair<std::string, std::string>;

    // Orients and completes `equations`.  Throws Undecided when the limits
    // are reached before the system is confluent.
    RewritingSystem(ShortlexOrder                                    order,
                    std::vector<std::pair<std::string, std::string>> equations,
                    CompletionLimits const&                          limits = {});

    std::vector<Rule> const& rules() const noexcept {
      return _rules;
    }

    ShortlexOrder const& order() const noexcept {
      return _order;
    }

    // The unique irreducible word equivalent to `word`.
    std::string reduce(std::string_view word) const;

    bool is_reducible(std::string_view word) const;

   private:
    void add_equation(std::string a, std::string b, std::vector<Rule>& pending);
    void complete(std::vector<Rule> pending, CompletionLimits const& limits);

    ShortlexOrder     _order;
    std::vector<Rule> _rules;
  };

}  // namespace omegamon

#endif  // OMEGAMON_REWRITING_HPP_
