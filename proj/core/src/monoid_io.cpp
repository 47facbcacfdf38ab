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

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "omegamon/error.hpp"
#include "omegamon/monoid.hpp"

namespace omegamon {

  namespace {
    struct LineReader {
      std::istream& in;
      std::size_t   line_no = 0;

      // Next non-blank, non-comment line, or false at end of input.
      bool next(std::string& line) {
        while (std::getline(in, line)) {
          ++line_no;
          auto const first = line.find_first_not_of(" \t\r");
          if (first == std::string::npos || line[first] == '#') {
            continue;
          }
          return true;
        }
        return false;
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError("monoid file: " + what, line_no);
      }
    };

    std::size_t parse_index(LineReader const& r, std::string const& token) {
      std::size_t pos   = 0;
      std::size_t value = 0;
      try {
        value = std::stoul(token, &pos);
      } catch (std::exception const&) {
        r.fail("expected a non-negative integer, got '" + token + "'");
      }
      if (pos != token.size() || token.front() == '-') {
        r.fail("expected a non-negative integer, got '" + token + "'");
      }
      return value;
    }
  }  // namespace

  void write_monoid(std::ostream& out, FiniteMonoid const& M) {
    out << "size " << M.size() << '\n';
    out << "identity " << M.identity() << '\n';
    out << "generators";
    for (auto g : M.generators()) {
      out << ' ' << g;
    }
    out << '\n';
    for (element_t s = 0; s < M.size(); ++s) {
      auto const row = M.row(s);
      for (std::size_t t = 0; t < row.size(); ++t) {
        out << (t == 0 ? "" : " ") << row[t];
      }
      out << '\n';
    }
    if (M.has_labels()) {
      for (element_t s = 0; s < M.size(); ++s) {
        out << "label " << s << ' ' << M.label(s) << '\n';
      }
    }
  }

  FiniteMonoid read_monoid(std::istream& in) {
    LineReader  r{in};
    std::string line;
    std::string keyword;

    auto header = [&](char const* expected) {
      if (!r.next(line)) {
        r.fail(std::string("missing '") + expected + "' line");
      }
      std::istringstream ss(line);
      ss >> keyword;
      if (keyword != expected) {
        r.fail(std::string("expected '") + expected + "', got '" + keyword + "'");
      }
      std::vector<std::size_t> values;
      std::string              token;
      while (ss >> token) {
        values.push_back(parse_index(r, token));
      }
      return values;
    };

    auto const size_line = header("size");
    if (size_line.size() != 1 || size_line[0] == 0) {
      r.fail("'size' takes one positive integer");
    }
    std::size_t const n             = size_line[0];
    auto const        identity_line = header("identity");
    if (identity_line.size() != 1) {
      r.fail("'identity' takes one index");
    }
    auto const gens_line = header("generators");

    std::vector<element_t> table;
    table.reserve(n * n);
    for (std::size_t s = 0; s < n; ++s) {
      if (!r.next(line)) {
        r.fail("expected " + std::to_string(n) + " table rows");
      }
      std::istringstream ss(line);
      std::string        token;
      std::size_t        count = 0;
      while (ss >> token) {
        table.push_back(static_cast<element_t>(parse_index(r, token)));
        ++count;
      }
      if (count != n) {
        r.fail("table row has " + std::to_string(count) + " entries, expected "
               + std::to_string(n));
      }
    }

    std::vector<std::string> labels;
    while (r.next(line)) {
      std::istringstream ss(line);
      std::string        token;
      std::string        word;
      ss >> keyword >> token >> word;
      if (keyword != "label" || word.empty()) {
        r.fail("unexpected line '" + line + "'");
      }
      std::size_t const s = parse_index(r, token);
      if (s >= n) {
        r.fail("label index out of range");
      }
      if (labels.empty()) {
        labels.resize(n);
      }
      labels[s] = word == "1" ? "" : word;
    }

    std::vector<element_t> gens(gens_line.begin(), gens_line.end());
    try {
      FiniteMonoid M(n, std::move(table), static_cast<element_t>(identity_line[0]),
                     std::move(gens), std::move(labels));
      if (!is_associative(M)) {
        throw InvalidArgument("multiplication table is not associative");
      }
      return M;
    } catch (ParseError const&) {
      throw;
    } catch (InvalidArgument const& e) {
      throw InvalidArgument(std::string("monoid file: ") + e.what());
    }
  }

  std::string to_monoid_text(FiniteMonoid const& M) {
    std::ostringstream out;
    write_monoid(out, M);
    return out.str();
  }

  FiniteMonoid from_monoid_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_monoid(in);
  }

  FiniteMonoid load_monoid_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InvalidArgument("cannot open monoid file '" + path + "'");
    }
    return read_monoid(in);
  }

}  // namespace omegamon
