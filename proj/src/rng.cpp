/*
 * Copyright 2026 The mash-sim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "mash/rng.hpp"

#include <cmath>
#include <numbers>

namespace mash {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t hash_words(std::initializer_list<std::uint64_t> words) {
  std::uint64_t state = 0x8a5cd789635d2dffull;
  std::uint64_t acc = 0;
  for (std::uint64_t w : words) {
    state ^= w;
    acc = splitmix64(state) ^ (acc * 0x2545F4914F6CDD1Dull);
  }
  // One extra scramble so that short lists are fully mixed too.
  state ^= acc;
  return splitmix64(state);
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform_open();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  has_spare_ = true;
  return r * std::cos(phi);
}

cplx Rng::cgaussian(double var) {
  // sqrt(-ln u) * e^{i 2 pi v} has E|z|^2 = 1 and circular symmetry.
  const double u1 = uniform_open();
  const double u2 = uniform();
  const double r = std::sqrt(-std::log(u1) * var);
  const double phi = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(phi), r * std::sin(phi)};
}

CMat Rng::cgaussian_matrix(Eigen::Index rows, Eigen::Index cols, double var) {
  CMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = cgaussian(var);
  return m;
}

}  // namespace mash
