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

#include "permrep/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permrep {

Perm::Perm(std::vector<uint8_t> map) : map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (uint8_t v : map_) {
        if (v >= map_.size() || seen[v]) {
            throw std::invalid_argument("Perm: map is not a bijection");
        }
        seen[v] = true;
    }
}

Perm Perm::identity(int m) {
    std::vector<uint8_t> v(m);
    std::iota(v.begin(), v.end(), 0);
    return Perm(std::move(v));
}

Perm Perm::transposition(int m, int i, int j) {
    Perm p = identity(m);
    std::swap(p.map_[i], p.map_[j]);
    return p;
}

Perm Perm::from_cycle(int m, const std::vector<int>& points) {
    Perm p = identity(m);
    for (size_t k = 0; k < points.size(); ++k) {
        p.map_[points[k]] = static_cast<uint8_t>(points[(k + 1) % points.size()]);
    }
    return p;
}

Perm Perm::from_cycle_string(int m, const std::string& text) {
    Perm p = identity(m);
    std::vector<int> cur;
    std::string num;
    auto flush_num = [&] {
        if (!num.empty()) {
            int v = std::stoi(num) - 1;
            if (v < 0 || v >= m) throw std::invalid_argument("cycle string: point out of range");
            cur.push_back(v);
            num.clear();
        }
    };
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            num += c;
        } else if (c == ' ' || c == ',') {
            flush_num();
        } else if (c == '(') {
            cur.clear();
        } else if (c == ')') {
            flush_num();
            for (size_t k = 0; k < cur.size(); ++k) {
                p.map_[cur[k]] = static_cast<uint8_t>(cur[(k + 1) % cur.size()]);
            }
            cur.clear();
        } else {
            throw std::invalid_argument("cycle string: unexpected character");
        }
    }
    return p;
}

Perm Perm::inverse() const {
    std::vector<uint8_t> inv(map_.size());
    for (size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = static_cast<uint8_t>(i);
    Perm p;
    p.map_ = std::move(inv);
    return p;
}

bool Perm::is_identity() const {
    for (size_t i = 0; i < map_.size(); ++i) {
        if (map_[i] != i) return false;
    }
    return true;
}

int Perm::cycle_count() const {
    int count = 0;
    uint32_t seen = 0;  // m <= 12 in practice; still guard larger sizes
    std::vector<bool> big;
    bool use_big = map_.size() > 32;
    if (use_big) big.assign(map_.size(), false);
    for (size_t i = 0; i < map_.size(); ++i) {
        bool visited = use_big ? big[i] : ((seen >> i) & 1u);
        if (visited) continue;
        ++count;
        size_t j = i;
        while (true) {
            bool v = use_big ? big[j] : ((seen >> j) & 1u);
            if (v) break;
            if (use_big) {
                big[j] = true;
            } else {
                seen |= 1u << j;
            }
            j = map_[j];
        }
    }
    return count;
}

std::vector<int> Perm::cycle_type() const {
    std::vector<int> type;
    std::vector<bool> seen(map_.size(), false);
    for (size_t i = 0; i < map_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = map_[j];
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

std::string Perm::cycle_string() const {
    std::ostringstream out;
    std::vector<bool> seen(map_.size(), false);
    bool any = false;
    for (size_t i = 0; i < map_.size(); ++i) {
        if (seen[i] || map_[i] == i) continue;
        any = true;
        out << '(';
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out << ' ';
            out << (j + 1);
            first = false;
            j = map_[j];
        }
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

uint64_t Perm::lex_rank() const {
    int m = size();
    uint64_t rank = 0;
    uint64_t fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    for (int i = 0; i < m; ++i) {
        fact /= (m - i);
        int smaller = 0;
        for (int j = i + 1; j < m; ++j) {
            if (map_[j] < map_[i]) ++smaller;
        }
        rank += smaller * fact;
    }
    return rank;
}

Perm Perm::from_lex_rank(int m, uint64_t rank) {
    std::vector<uint8_t> pool(m);
    std::iota(pool.begin(), pool.end(), 0);
    uint64_t fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    std::vector<uint8_t> map(m);
    for (int i = 0; i < m; ++i) {
        fact /= (m - i);
        uint64_t k = rank / fact;
        rank %= fact;
        map[i] = pool[k];
        pool.erase(pool.begin() + static_cast<long>(k));
    }
    return Perm(std::move(map));
}

Perm compose(const Perm& p, const Perm& q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("compose: size mismatch");
    }
    std::vector<uint8_t> r(p.size());
    for (int x = 0; x < p.size(); ++x) r[x] = static_cast<uint8_t>(p(q(x)));
    return Perm(std::move(r));
}

Perm conjugate(const Perm& g, const Perm& p) {
    return compose(compose(g, p), g.inverse());
}

void for_each_perm(int m, const std::function<void(const Perm&)>& fn) {
    std::vector<uint8_t> v(m);
    std::iota(v.begin(), v.end(), 0);
    do {
        fn(Perm(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

std::vector<Perm> all_perms(int m) {
    std::vector<Perm> out;
    for_each_perm(m, [&](const Perm& p) { out.push_back(p); });
    return out;
}

}  // namespace permrep
