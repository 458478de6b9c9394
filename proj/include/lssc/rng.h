// Copyright 2026 LSSC Contributors
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

#ifndef LSSC_RNG_H
#define LSSC_RNG_H

#include <cmath>
#include <cstdint>

namespace lssc {

inline uint64_t splitmix64(uint64_t &state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// xoshiro256++ keyed by (seed, shot, stream) via splitmix64, so any shot of
/// any stream can be sampled independently of worker count or order.
struct ShotRng {
    uint64_t s[4];

    ShotRng(uint64_t seed, uint64_t shot, uint64_t stream = 0) {
        uint64_t key = seed;
        s[0] = splitmix64(key);
        key ^= 0x9e3779b97f4a7c15ull * (shot + 1);
        s[1] = splitmix64(key);
        key ^= 0xd1b54a32d192ed03ull * (stream + 1);
        s[2] = splitmix64(key);
        s[3] = splitmix64(key);
        for (int i = 0; i < 4; i++) {
            next();
        }
    }

    static uint64_t rotl(uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    uint64_t next() {
        uint64_t result = rotl(s[0] + s[3], 23) + s[0];
        uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }

    /// Uniform in [0, 1).
    double uniform() {
        return (double)(next() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) {
        return uniform() < p;
    }

    /// Geometric gap between successes of rate p, for sparse bit sampling.
    uint64_t geometric_skip(double p) {
        if (p <= 0) {
            return UINT64_MAX;
        }
        if (p >= 1) {
            return 0;
        }
        double u = uniform();
        return (uint64_t)(std::log1p(-u) / std::log1p(-p));
    }
};

}  // namespace lssc

#endif
