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

#ifndef IEXSIM_PERMREP_PERM_HPP
#define IEXSIM_PERMREP_PERM_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace permrep {

/// An element of S_m stored as its one-line map (0-based internally).
/// Composition convention throughout: (p * q)(x) = p(q(x)), i.e. q acts first.
/// Cycle-notation I/O is 1-based, e.g. "(1 2)(3 4)".
class Perm {
  public:
    Perm() = default;
    explicit Perm(std::vector<uint8_t> map);

    static Perm identity(int m);
    static Perm transposition(int m, int i, int j);  // 0-based points
    /// Cycle built from an ordered point list: points[k] -> points[k+1], wrapping.
    static Perm from_cycle(int m, const std::vector<int>& points);
    static Perm from_cycle_string(int m, const std::string& text);  // 1-based "(1 2)(3 4)"

    int size() const { return static_cast<int>(map_.size()); }
    int apply(int x) const { return map_[x]; }
    int operator()(int x) const { return map_[x]; }
    const std::vector<uint8_t>& map() const { return map_; }

    Perm inverse() const;
    bool is_identity() const;
    int cycle_count() const;
    std::vector<int> cycle_type() const;  // lengths, descending
    std::string cycle_string() const;     // canonical: cycles sorted by least point

    /// Rank in the lexicographic ordering of all of S_m (the canonical table order).
    uint64_t lex_rank() const;
    static Perm from_lex_rank(int m, uint64_t rank);

    friend bool operator==(const Perm& a, const Perm& b) = default;
    friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
        return a.map_ <=> b.map_;
    }

  private:
    std::vector<uint8_t> map_;
};

/// (p * q)(x) = p(q(x)). Throws std::invalid_argument on size mismatch.
Perm compose(const Perm& p, const Perm& q);

/// g p g^{-1}.
Perm conjugate(const Perm& g, const Perm& p);

/// Calls fn for every element of S_m in lexicographic order.
void for_each_perm(int m, const std::function<void(const Perm&)>& fn);

/// All of S_m in lexicographic order (use only for small m).
std::vector<Perm> all_perms(int m);

}  // namespace permrep

#endif
