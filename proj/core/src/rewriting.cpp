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

#include "omegamon/rewriting.hpp"

#include <algorithm>

#include "omegamon/error.hpp"

namespace omegamon {

  ShortlexOrder::ShortlexOrder(std::string symbols) : _symbols(std::move(symbols)) {
    std::fill(std::begin(_rank), std::end(_rank), -1);
    for (std::size_t i = 0; i < _symbols.size(); ++i) {
      auto& r = _rank[static_cast<unsigned char>(_symbols[i])];
      if (r != -1) {
        throw InvalidArgument(std::string("repeated symbol '") + _symbols[i] + "'");
      }
      r = static_cast<int>(i);
    }
  }

  bool ShortlexOrder::less(std::string_view a, std::string_view b) const {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      int const ra = _rank[static_cast<unsigned char>(a[i])];
      int const rb = _rank[static_cast<unsigned char>(b[i])];
      if (ra != rb) {
        return ra < rb;
      }
    }
    return false;
  }

  RewritingSystem::RewritingSystem(ShortlexOrder                                    order,
                                   std::vector<std::pair<std::string, std::string>> equations,
                                   CompletionLimits const&                          limits)
      : _order(std::move(order)) {
    for (auto const& [a, b] : equations) {
      for (auto const* w : {&a, &b}) {
        for (char c : *w) {
          if (_order.symbols().find(c) == std::string::npos) {
            throw InvalidArgument(std::string("symbol '") + c + "' not in '"
                                  + _order.symbols() + "'");
          }
        }
      }
    }
    complete(std::move(equations), limits);
  }

  std::string RewritingSystem::reduce(std::string_view word) const {
    std::string       result;
    std::vector<char> todo(word.rbegin(), word.rend());
    while (!todo.empty()) {
      result.push_back(todo.back());
      todo.pop_back();
      for (auto const& [lhs, rhs] : _rules) {
        if (result.size() >= lhs.size()
            && result.compare(result.size() - lhs.size(), lhs.size(), lhs) == 0) {
          result.resize(result.size() - lhs.size());
          todo.insert(todo.end(), rhs.rbegin(), rhs.rend());
          break;
        }
      }
    }
    return result;
  }

  bool RewritingSystem::is_reducible(std::string_view word) const {
    return std::any_of(_rules.begin(), _rules.end(), [word](Rule const& r) {
      return word.find(r.first) != std::string_view::npos;
    });
  }

  void RewritingSystem::add_equation(std::string a, std::string b, std::vector<Rule>& pending) {
    if (_order.less(a, b)) {
      std::swap(a, b);
    }
    // Rules whose left side contains the new one are re-queued.
    std::vector<Rule> kept;
    for (auto& rule : _rules) {
      if (rule.first.find(a) != std::string::npos) {
        pending.push_back(std::move(rule));
      } else {
        kept.push_back(std::move(rule));
      }
    }
    kept.emplace_back(std::move(a), std::move(b));
    _rules = std::move(kept);
    for (auto& rule : _rules) {
      rule.second = reduce(rule.second);
    }
  }

  void RewritingSystem::complete(std::vector<Rule> pending, CompletionLimits const& limits) {
    while (true) {
      while (!pending.empty()) {
        auto [a, b] = std::move(pending.back());
        pending.pop_back();
        a = reduce(a);
        b = reduce(b);
        if (a == b) {
          continue;
        }
        if (std::max(a.size(), b.size()) > limits.max_rule_length) {
          throw Undecided("completion produced a rule longer than "
                          + std::to_string(limits.max_rule_length));
        }
        add_equation(std::move(a), std::move(b), pending);
        if (_rules.size() > limits.max_rules) {
          throw Undecided("completion exceeds " + std::to_string(limits.max_rules) + " rules");
        }
      }
      for (auto const& [l1, r1] : _rules) {
        for (auto const& [l2, r2] : _rules) {
          std::size_t const overlap_max = std::min(l1.size(), l2.size());
          for (std::size_t k = 1; k < overlap_max; ++k) {
            if (l1.compare(l1.size() - k, k, l2, 0, k) != 0) {
              continue;
            }
            std::string const w1 = reduce(r1 + l2.substr(k));
            std::string const w2 = reduce(l1.substr(0, l1.size() - k) + r2);
            if (w1 != w2) {
              pending.emplace_back(w1, w2);
            }
          }
        }
      }
      if (pending.empty()) {
        break;
      }
    }
    std::sort(_rules.begin(), _rules.end(), [this](Rule const& x, Rule const& y) {
      return _order.less(x.first, y.first);
    });
  }

}  // namespace omegamon
