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

#include "qjump/rng.hpp"

#include <cmath>

namespace qjump {

uint64_t derive_stream_seed(uint64_t master_seed, uint64_t index) {
    SplitMix64 mixer(master_seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
    return mixer.next();
}

Xoshiro256pp::Xoshiro256pp(uint64_t seed) {
    SplitMix64 mixer(seed);
    for (auto& word : s_) {
        word = mixer.next();
    }
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) {
        s_[0] = 0x9E3779B97F4A7C15ULL;  // all-zero state is the one fixed point
    }
}

static inline uint64_t rotl64(uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

uint64_t Xoshiro256pp::next() {
    const uint64_t result = rotl64(s_[0] + s_[3], 23) + s_[0];
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl64(s_[3], 45);
    return result;
}

double Xoshiro256pp::next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double GaussianStream::next() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = rng_.next_double();
    const double u2 = rng_.next_double();
    const double radius = std::sqrt(-2.0 * std::log1p(-u1));  // u1 in [0,1) keeps the log finite
    const double angle = 2.0 * M_PI * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
}

}  // namespace qjump
