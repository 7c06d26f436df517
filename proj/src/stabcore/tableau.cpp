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

#include "stabcore/tableau.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace stabcore {

StabTableau::StabTableau(int num_qubits) {
    if (num_qubits < 0) throw std::invalid_argument("StabTableau: negative qubit count");
    words_ = std::max<size_t>(1, (static_cast<size_t>(num_qubits) + 63) / 64);
    for (int q = 0; q < num_qubits; ++q) add_zero_qubit();
}

void StabTableau::grow(int new_qubits) {
    size_t need = (static_cast<size_t>(new_qubits) + 63) / 64;
    size_t new_words = words_;
    while (new_words < need) new_words *= 2;
    if (new_words != words_) {
        std::vector<uint64_t> nx(static_cast<size_t>(n_) * new_words, 0);
        std::vector<uint64_t> nz(static_cast<size_t>(n_) * new_words, 0);
        for (int r = 0; r < n_; ++r) {
            std::copy_n(xbits_.begin() + static_cast<long>(r * words_), words_,
                        nx.begin() + static_cast<long>(r) * static_cast<long>(new_words));
            std::copy_n(zbits_.begin() + static_cast<long>(r * words_), words_,
                        nz.begin() + static_cast<long>(r) * static_cast<long>(new_words));
        }
        xbits_ = std::move(nx);
        zbits_ = std::move(nz);
        words_ = new_words;
    }
}

int StabTableau::add_zero_qubit() {
    grow(n_ + 1);
    int col = n_;
    ++n_;
    xbits_.resize(static_cast<size_t>(n_) * words_, 0);
    zbits_.resize(static_cast<size_t>(n_) * words_, 0);
    sign_.push_back(0);
    set_bit(zbits_, n_ - 1, col, true);  // stabilizer Z on the new qubit
    return col;
}

std::pair<int, int> StabTableau::add_bell_pair() {
    int a = add_zero_qubit();
    int b = add_zero_qubit();
    apply_h(a);
    apply_cnot(a, b);
    return {a, b};
}

void StabTableau::apply_h(int q) {
    for (int r = 0; r < n_; ++r) {
        bool x = x_bit(r, q), z = z_bit(r, q);
        if (x && z) sign_[r] ^= 1;
        set_bit(xbits_, r, q, z);
        set_bit(zbits_, r, q, x);
    }
}

void StabTableau::apply_s(int q) {
    for (int r = 0; r < n_; ++r) {
        bool x = x_bit(r, q), z = z_bit(r, q);
        if (x && z) sign_[r] ^= 1;
        set_bit(zbits_, r, q, x ^ z);
    }
}

void StabTableau::apply_cnot(int control, int target) {
    for (int r = 0; r < n_; ++r) {
        bool xc = x_bit(r, control), zc = z_bit(r, control);
        bool xt = x_bit(r, target), zt = z_bit(r, target);
        if (xc && zt && (xt == zc)) sign_[r] ^= 1;
        set_bit(xbits_, r, target, xt ^ xc);
        set_bit(zbits_, r, control, zc ^ zt);
    }
}

void StabTableau::apply_swap(int a, int b) {
    for (int r = 0; r < n_; ++r) {
        bool xa = x_bit(r, a), za = z_bit(r, a);
        bool xb = x_bit(r, b), zb = z_bit(r, b);
        set_bit(xbits_, r, a, xb);
        set_bit(zbits_, r, a, zb);
        set_bit(xbits_, r, b, xa);
        set_bit(zbits_, r, b, za);
    }
}

void StabTableau::apply_clifford2(const Clifford2& gate, int qa, int qb) {
    for (int r = 0; r < n_; ++r) {
        uint8_t xz = static_cast<uint8_t>(x_bit(r, qa) | (z_bit(r, qa) << 1) | (x_bit(r, qb) << 2) |
                                          (z_bit(r, qb) << 3));
        if (xz == 0) continue;
        Pauli2 img = gate.conjugate(Pauli2{xz, 0});
        set_bit(xbits_, r, qa, img.xz & 1);
        set_bit(zbits_, r, qa, (img.xz >> 1) & 1);
        set_bit(xbits_, r, qb, (img.xz >> 2) & 1);
        set_bit(zbits_, r, qb, (img.xz >> 3) & 1);
        if (img.phase == 2) sign_[r] ^= 1;
    }
}

int StabTableau::entropy_region(std::span<const int> region) const {
    const int k = static_cast<int>(region.size());
    if (k == 0) return 0;
    const int cols = 2 * k;
    const size_t rw = (static_cast<size_t>(cols) + 63) / 64;
    std::vector<uint64_t> rows(static_cast<size_t>(n_) * rw, 0);
    for (int r = 0; r < n_; ++r) {
        uint64_t* dst = rows.data() + static_cast<size_t>(r) * rw;
        for (int i = 0; i < k; ++i) {
            int c = region[i];
            if (x_bit(r, c)) dst[(2 * i) >> 6] |= 1ULL << ((2 * i) & 63);
            if (z_bit(r, c)) dst[(2 * i + 1) >> 6] |= 1ULL << ((2 * i + 1) & 63);
        }
    }
    // GF(2) row echelon over the restricted columns
    int rank = 0;
    for (int c = 0; c < cols && rank < n_; ++c) {
        const size_t w = static_cast<size_t>(c) >> 6;
        const uint64_t mask = 1ULL << (c & 63);
        int piv = -1;
        for (int r = rank; r < n_; ++r) {
            if (rows[static_cast<size_t>(r) * rw + w] & mask) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != rank) {
            for (size_t i = 0; i < rw; ++i) {
                std::swap(rows[static_cast<size_t>(piv) * rw + i], rows[static_cast<size_t>(rank) * rw + i]);
            }
        }
        const uint64_t* prow = rows.data() + static_cast<size_t>(rank) * rw;
        for (int r = rank + 1; r < n_; ++r) {
            uint64_t* rr = rows.data() + static_cast<size_t>(r) * rw;
            if (rr[w] & mask) {
                for (size_t i = 0; i < rw; ++i) rr[i] ^= prow[i];
            }
        }
        ++rank;
    }
    return rank - k;
}

int StabTableau::entropy_region_min_side(std::span<const int> region) const {
    if (2 * static_cast<int>(region.size()) <= n_) return entropy_region(region);
    std::vector<uint8_t> in(n_, 0);
    for (int c : region) in[c] = 1;
    std::vector<int> comp;
    comp.reserve(n_ - region.size());
    for (int c = 0; c < n_; ++c) {
        if (!in[c]) comp.push_back(c);
    }
    return entropy_region(comp);
}

bool StabTableau::check_invariants() const {
    // pairwise symplectic commutation
    for (int a = 0; a < n_; ++a) {
        for (int b = a + 1; b < n_; ++b) {
            uint64_t acc = 0;
            const uint64_t* xa = xbits_.data() + static_cast<size_t>(a) * words_;
            const uint64_t* za = zbits_.data() + static_cast<size_t>(a) * words_;
            const uint64_t* xb = xbits_.data() + static_cast<size_t>(b) * words_;
            const uint64_t* zb = zbits_.data() + static_cast<size_t>(b) * words_;
            for (size_t i = 0; i < words_; ++i) acc ^= (xa[i] & zb[i]) ^ (za[i] & xb[i]);
            if (std::popcount(acc) & 1) return false;
        }
    }
    // full rank: all columns
    std::vector<int> all(n_);
    for (int i = 0; i < n_; ++i) all[i] = i;
    return entropy_region(all) == 0;
}

std::string StabTableau::debug_hex() const {
    std::ostringstream out;
    out << std::hex;
    for (int r = 0; r < n_; ++r) {
        out << (sign_[r] ? '-' : '+');
        for (size_t i = 0; i < words_; ++i) {
            out << ' ' << xbits_[static_cast<size_t>(r) * words_ + i];
        }
        out << " |";
        for (size_t i = 0; i < words_; ++i) {
            out << ' ' << zbits_[static_cast<size_t>(r) * words_ + i];
        }
        out << '\n';
    }
    return out.str();
}

bool StabTableau::operator==(const StabTableau& other) const {
    if (n_ != other.n_) return false;
    for (int r = 0; r < n_; ++r) {
        if (sign_[r] != other.sign_[r]) return false;
        for (int c = 0; c < n_; ++c) {
            if (x_bit(r, c) != other.x_bit(r, c) || z_bit(r, c) != other.z_bit(r, c)) return false;
        }
    }
    return true;
}

}  // namespace stabcore
