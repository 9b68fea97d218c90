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

#ifndef MASH_RNG_HPP
#define MASH_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

#include "mash/types.hpp"

namespace mash {

/// Purpose tags for derived random streams. Every consumer of randomness is
/// keyed by (master seed, tag, indices...) so that trial t can be generated
/// without executing trials < t, and independently of thread scheduling.
enum class Stream : std::uint64_t {
  kTransform = 0x7452414e53464d31ull,
  kChannel = 0x4348414e4e454c31ull,
  kNoise = 0x4e4f495345000031ull,
  kJammer = 0x4a414d4d45520031ull,
  kBits = 0x4249545300000031ull,
  kUeSecret = 0x55455345435245ull,
  kProp1 = 0x50524f5031000031ull,
  kThm1 = 0x54484d3100000031ull,
};

std::uint64_t splitmix64(std::uint64_t& state);

/// Mixes an arbitrary list of 64-bit words into one well-scrambled seed.
std::uint64_t hash_words(std::initializer_list<std::uint64_t> words);

inline std::uint64_t derive_seed(std::uint64_t master, Stream tag,
                                 std::uint64_t a = 0, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
  return hash_words({master, static_cast<std::uint64_t>(tag), a, b, c});
}

/// Deterministic random source. The Gaussian path is implemented explicitly
/// (Box-Muller on top of mt19937_64 words) so that a given seed produces
/// bit-identical draws on every platform and thread count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in (0, 1]; safe as a log() argument.
  double uniform_open() { return 1.0 - uniform(); }

  /// Uniform integer in [0, n).
  std::size_t uniform_index(std::size_t n) {
    // Rejection-free modulo bias is irrelevant at n << 2^64, but stay exact.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % n);
  }

  /// Standard real Gaussian N(0, 1).
  double gaussian();

  /// Circularly-symmetric complex Gaussian CN(0, var).
  cplx cgaussian(double var = 1.0);

  /// Uniform on {-1, +1}.
  double rademacher() { return (eng_() & 1u) ? 1.0 : -1.0; }

  /// Matrix with i.i.d. CN(0, var) entries, filled row-major.
  CMat cgaussian_matrix(Eigen::Index rows, Eigen::Index cols, double var = 1.0);

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace mash

#endif  // MASH_RNG_HPP
