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

#include "omegamon/transformation.hpp"

#include "omegamon/error.hpp"

namespace omegamon {

  Transformation::Transformation(std::vector<std::uint32_t> images)
      : _images(std::move(images)) {
    if (_images.empty()) {
      throw InvalidArgument("a transformation must have degree >= 1");
    }
    for (auto x : _images) {
      if (x >= _images.size()) {
        throw InvalidArgument("transformation image " + std::to_string(x)
                              + " out of range for degree "
                              + std::to_string(_images.size()));
      }
    }
  }

  Transformation::Transformation(std::initializer_list<std::uint32_t> images)
      : Transformation(std::vector<std::uint32_t>(images)) {}

  Transformation Transformation::identity(std::size_t degree) {
    std::vector<std::uint32_t> im(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      im[i] = static_cast<std::uint32_t>(i);
    }
    return Transformation(std::move(im));
  }

  bool Transformation::is_identity() const noexcept {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i) {
        return false;
      }
    }
    return true;
  }

  Transformation Transformation::operator*(Transformation const& that) const {
    if (that.degree() != degree()) {
      throw InvalidArgument("cannot compose transformations of degree "
                            + std::to_string(degree()) + " and "
                            + std::to_string(that.degree()));
    }
    Transformation result;
    result._images.resize(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i) {
      result._images[i] = that._images[_images[i]];
    }
    return result;
  }

  std::size_t
  TransformationHash::operator()(Transformation const& t) const noexcept {
    std::size_t h = t.degree();
    for (auto x : t.images()) {
      h = h * 0x100000001b3ULL ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
    return h;
  }

}  // namespace omegamon
