// Copyright 2026 The graphent Authors
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

#ifndef GRAPHENT_RNG_H
#define GRAPHENT_RNG_H

#include <cstdint>
#include <random>

namespace graphent {

/// splitmix64 finalizer.
inline uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Independent generator for stream `index` under `seed`. Streams depend only
/// on (seed, index), never on scheduling.
inline std::mt19937_64 stream_rng(uint64_t seed, uint64_t index) {
    return std::mt19937_64(mix64(mix64(seed) ^ mix64(index + 0x5851F42D4C957F2DULL)));
}

}  // namespace graphent

#endif
