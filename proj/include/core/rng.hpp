// Copyright 2026 The iexsim Authors
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

#ifndef IEXSIM_CORE_RNG_HPP
#define IEXSIM_CORE_RNG_HPP

#include <cmath>
#include <cstdint>
#include <string_view>

namespace core {

// Counter-based generator: every stream is a pure function of
// (master_seed, derivation path), so identical configs reproduce identical
// draws regardless of evaluation order or thread count.

inline uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t hash_combine(uint64_t a, uint64_t b) {
    return mix64(a ^ (mix64(b) + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

inline uint64_t hash_tag(std::string_view tag) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : tag) {
        h ^= static_cast<uint8_t>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Derive a child seed from a path of tags/indices, e.g.
//   derive(master, "gate", layer, brick)
inline uint64_t derive(uint64_t seed, std::string_view tag) {
    return hash_combine(seed, hash_tag(tag));
}
inline uint64_t derive(uint64_t seed, std::string_view tag, uint64_t a) {
    return hash_combine(derive(seed, tag), a);
}
inline uint64_t derive(uint64_t seed, std::string_view tag, uint64_t a, uint64_t b) {
    return hash_combine(derive(seed, tag, a), b);
}
inline uint64_t derive(uint64_t seed, std::string_view tag, uint64_t a, uint64_t b, uint64_t c) {
    return hash_combine(derive(seed, tag, a, b), c);
}

class Rng {
  public:
    explicit Rng(uint64_t key) : key_(key) {}

    uint64_t next_u64() { return mix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

    // Uniform in [0, n) without modulo bias (rejection on the top band).
    uint64_t next_below(uint64_t n) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool next_bernoulli(double p) { return next_double() < p; }

    // Box-Muller; hand-rolled so draws are identical across standard libraries.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do {
            u1 = next_double();
        } while (u1 <= 0.0);
        u2 = next_double();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

  private:
    uint64_t key_;
    uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace core

#endif
