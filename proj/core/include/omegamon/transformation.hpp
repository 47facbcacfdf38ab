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

#ifndef OMEGAMON_TRANSFORMATION_HPP_
#define OMEGAMON_TRANSFORMATION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace omegamon {

  // A full transformation of {0, ..., degree - 1}.  Products act on the
  // right: (f * g)(i) == g(f(i)), so a word u v acts as "u, then v", which is
  // how letters act on the states of an automaton.
  class Transformation {
   public:
    Transformation() = default;
    explicit Transformation(std::vector<std::uint32_t> images);
    Transformation(std::initializer_list<std::uint32_t> images);

    static Transformation identity(std::size_t degree);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    std::uint32_t operator[](std::size_t i) const noexcept {
      return _images[i];
    }

    std::vector<std::uint32_t> const& images() const noexcept {
      return _images;
    }

    bool is_identity() const noexcept;

    Transformation operator*(Transformation const& that) const;

    bool operator==(Transformation const&) const = default;

   private:
    std::vector<std::uint32_t> _images;
  };

  struct TransformationHash {
    std::size_t operator()(Transformation const& t) const noexcept;
  };

}  // namespace omegamon

#endif  // OMEGAMON_TRANSFORMATION_HPP_
