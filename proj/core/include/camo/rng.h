//
// Copyright 2026 The Camo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef CAMO_RNG_H_
#define CAMO_RNG_H_

#include <array>
#include <cstdint>
#include <string>

namespace camo {

// xoshiro256** (Blackman & Vigna). All derived quantities below are defined
// bit-for-bit so that a seed reproduces the same stream on any platform or
// in any language:
//
//   NextU64()      raw xoshiro256** output
//   Uniform01()    (NextU64() >> 11) * 2^-53, in [0, 1)
//   Bernoulli(p)   Uniform01() < p  (always consumes one draw)
//   UniformInt(n)  rejection sampling on NextU64(): draws x until
//                  x >= (2^64 - n) mod n, returns x mod n
class Rng {
 public:
  using State = std::array<std::uint64_t, 4>;

  // The all-zero state is invalid for xoshiro; it is replaced by a fixed
  // non-zero constant.
  explicit Rng(const State& state);

  std::uint64_t NextU64();
  double Uniform01();
  bool Bernoulli(double p);
  // Uniform in [0, n). n must be positive.
  std::uint64_t UniformInt(std::uint64_t n);

  const State& state() const { return state_; }

 private:
  State state_;
};

// Hierarchical seed location: (master seed, key, epoch). Keys name the
// consumer, e.g. "suite/L2/v1/p50/select" or "dynamic/<instance id>".
struct SeedPath {
  std::uint64_t master_seed = 0;
  std::string instance_id;
  std::uint64_t epoch = 0;
};

// Seeds a generator from SHA-256 over
//   "camo-seed-v1" || u64le(master_seed) || u64le(epoch) || instance_id
// taking the 32-byte digest as four little-endian state words.
Rng DeriveRng(const SeedPath& path);

// Default --seed for the CLI and the library entry points.
inline constexpr std::uint64_t kDefaultSeed = 20240101;

}  // namespace camo

#endif  // CAMO_RNG_H_
