// Copyright 2026 The qjump-sim Authors
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

#pragma once

#include <cstdint>

namespace qjump {

/// splitmix64: one multiply-xor-shift round per output. Used to expand a
/// 64-bit seed into generator state and to derive per-trajectory seeds.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

  private:
    uint64_t state_;
};

/// Seed derivation for trajectory `index` from a master seed: splitmix64
/// finalizer applied to master + (index+1)*golden. Depends only on the
/// index, so ensemble results are independent of worker scheduling.
uint64_t derive_stream_seed(uint64_t master_seed, uint64_t index);

/// xoshiro256++ (Blackman & Vigna). State seeded from splitmix64.
class Xoshiro256pp {
  public:
    explicit Xoshiro256pp(uint64_t seed);

    uint64_t next();

    /// Uniform double in [0, 1) using the top 53 bits.
    double next_double();

  private:
    uint64_t s_[4];
};

/// Stream of independent standard normal deviates: xoshiro256++ uniforms
/// fed through the Box-Muller transform (the sine deviate of each pair is
/// cached). Same seed, same stream, on any platform with IEEE doubles and
/// the same libm rounding.
class GaussianStream {
  public:
    explicit GaussianStream(uint64_t seed) : rng_(seed) {}

    /// One N(0,1) deviate. Callers scale by sqrt(dt) at point of use.
    double next();

    uint64_t seed_used() const { return seed_; }

  private:
    Xoshiro256pp rng_;
    uint64_t seed_ = 0;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace qjump
