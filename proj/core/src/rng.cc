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

#include "camo/rng.h"

#include "camo/checksum.h"

namespace camo {
namespace {

std::uint64_t Rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

void AppendU64Le(std::uint64_t v, std::string* out) {
  for (int i = 0; i < 8; ++i) {
    out->push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
}

}  // namespace

Rng::Rng(const State& state) : state_(state) {
  if (state_[0] == 0 && state_[1] == 0 && state_[2] == 0 && state_[3] == 0) {
    state_ = {0x9E3779B97F4A7C15ULL, 0xBF58476D1CE4E5B9ULL,
              0x94D049BB133111EBULL, 0x2545F4914F6CDD1DULL};
  }
}

std::uint64_t Rng::NextU64() {
  const std::uint64_t result = Rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = Rotl(state_[3], 45);
  return result;
}

double Rng::Uniform01() {
  return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
}

bool Rng::Bernoulli(double p) { return Uniform01() < p; }

std::uint64_t Rng::UniformInt(std::uint64_t n) {
  // (2^64 - n) mod n, computed in 64-bit arithmetic.
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t x = NextU64();
    if (x >= threshold) return x % n;
  }
}

Rng DeriveRng(const SeedPath& path) {
  std::string material = "camo-seed-v1";
  AppendU64Le(path.master_seed, &material);
  AppendU64Le(path.epoch, &material);
  material += path.instance_id;
  const auto digest = Sha256(material);
  Rng::State state{};
  for (int w = 0; w < 4; ++w) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
      v |= static_cast<std::uint64_t>(digest[8 * w + i]) << (8 * i);
    }
    state[w] = v;
  }
  return Rng(state);
}

}  // namespace camo
