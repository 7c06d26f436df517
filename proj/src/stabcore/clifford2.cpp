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

#include "stabcore/clifford2.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace stabcore {

namespace {

// Phase exponent of i in W(a) * W(b) = i^g W(a^b) for single-qubit Paulis,
// indexed by code x + 2z: 0=I, 1=X, 2=Z, 3=Y. Cyclic X->Y->Z->X gives +i.
constexpr uint8_t kMulPhase[4][4] = {
    // I  X  Z  Y
    {0, 0, 0, 0},  // I .
    {0, 0, 3, 1},  // X . : X*Z=-iY, X*Y=iZ
    {0, 1, 0, 3},  // Z . : Z*X=iY,  Z*Y=-iX
    {0, 3, 1, 0},  // Y . : Y*X=-iZ, Y*Z=iX
};

inline int code1(uint8_t xz) { return (xz & 1) | ((xz >> 1) & 1) << 1; }
inline int code2(uint8_t xz) { return ((xz >> 2) & 1) | ((xz >> 3) & 1) << 1; }

}  // namespace

Pauli2 pauli_mul(const Pauli2& a, const Pauli2& b) {
    Pauli2 r;
    r.xz = a.xz ^ b.xz;
    r.phase = static_cast<uint8_t>(
        (a.phase + b.phase + kMulPhase[code1(a.xz)][code1(b.xz)] + kMulPhase[code2(a.xz)][code2(b.xz)]) & 3);
    return r;
}

int symplectic_product(uint8_t a, uint8_t b) {
    int v = ((a & 1) & ((b >> 1) & 1)) ^ (((a >> 1) & 1) & (b & 1)) ^
            (((a >> 2) & 1) & ((b >> 3) & 1)) ^ (((a >> 3) & 1) & ((b >> 2) & 1));
    return v;
}

std::array<std::complex<double>, 16> pauli_matrix(const Pauli2& p) {
    using cd = std::complex<double>;
    std::array<cd, 16> m{};
    const cd iu(0, 1);
    cd ph = std::pow(iu, p.phase);
    int x1 = p.xz & 1, z1 = (p.xz >> 1) & 1;
    int x2 = (p.xz >> 2) & 1, z2 = (p.xz >> 3) & 1;
    // W(x,z)|b> = i^{xz} (-1)^{zb} |b^x>, per qubit
    for (int b = 0; b < 4; ++b) {
        int b1 = b & 1, b2 = (b >> 1) & 1;
        int out = (b1 ^ x1) | ((b2 ^ x2) << 1);
        cd amp = ph * std::pow(iu, x1 * z1) * std::pow(iu, x2 * z2);
        if (z1 && b1) amp = -amp;
        if (z2 && b2) amp = -amp;
        m[out * 4 + b] = amp;
    }
    return m;
}

Pauli2 Clifford2::conjugate(const Pauli2& p) const {
    // p = i^phase * i^{x1 z1} i^{x2 z2} X1^{x1} Z1^{z1} X2^{x2} Z2^{z2};
    // conjugation maps each generator to its image, order preserved.
    int x1 = p.xz & 1, z1 = (p.xz >> 1) & 1;
    int x2 = (p.xz >> 2) & 1, z2 = (p.xz >> 3) & 1;
    Pauli2 r{0, static_cast<uint8_t>((p.phase + x1 * z1 + x2 * z2) & 3)};
    if (x1) r = pauli_mul(r, images[0]);
    if (z1) r = pauli_mul(r, images[1]);
    if (x2) r = pauli_mul(r, images[2]);
    if (z2) r = pauli_mul(r, images[3]);
    assert(r.phase == 0 || r.phase == 2);
    return r;
}

Clifford2 Clifford2::inverse() const {
    const Pauli2 targets[4] = {Pauli2::x1(), Pauli2::z1(), Pauli2::x2(), Pauli2::z2()};
    Clifford2 inv;
    for (int i = 0; i < 4; ++i) {
        bool found = false;
        for (int xz = 0; xz < 16 && !found; ++xz) {
            for (int ph = 0; ph < 4 && !found; ph += 2) {
                Pauli2 cand{static_cast<uint8_t>(xz), static_cast<uint8_t>(ph)};
                if (conjugate(cand) == targets[i]) {
                    inv.images[i] = cand;
                    found = true;
                }
            }
        }
        if (!found) throw std::logic_error("Clifford2::inverse: image search failed");
    }
    return inv;
}

std::array<std::complex<double>, 16> Clifford2::to_matrix() const {
    using cd = std::complex<double>;
    // |psi_00> is the (unique) state stabilized by the images of Z1 and Z2:
    // project |v> through (1 + Zbar1)/2 (1 + Zbar2)/2 and normalize.
    auto mz1 = pauli_matrix(images[1]);
    auto mz2 = pauli_matrix(images[3]);
    std::array<cd, 16> proj{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            cd id = (i == j) ? 1.0 : 0.0;
            cd p1 = 0.5 * (id + mz1[i * 4 + j]);
            proj[i * 4 + j] = p1;
        }
    }
    std::array<cd, 16> proj2{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            cd acc = 0;
            for (int k = 0; k < 4; ++k) {
                cd id = (k == j) ? 1.0 : 0.0;
                acc += proj[i * 4 + k] * 0.5 * (id + mz2[k * 4 + j]);
            }
            proj2[i * 4 + j] = acc;
        }
    }
    // any nonzero column of the rank-1 projector is proportional to |psi_00>
    std::array<cd, 4> psi{};
    double best = -1;
    for (int j = 0; j < 4; ++j) {
        double norm = 0;
        for (int i = 0; i < 4; ++i) norm += std::norm(proj2[i * 4 + j]);
        if (norm > best) {
            best = norm;
            for (int i = 0; i < 4; ++i) psi[i] = proj2[i * 4 + j];
        }
    }
    double norm = 0;
    for (auto& a : psi) norm += std::norm(a);
    norm = std::sqrt(norm);
    // canonical global phase: first nonzero amplitude real positive
    cd phase = 1;
    for (auto& a : psi) {
        if (std::abs(a) > 1e-9) {
            phase = std::conj(a) / std::abs(a);
            break;
        }
    }
    for (auto& a : psi) a = a * phase / norm;

    // column for |b1 b2> is Xbar1^{b1} Xbar2^{b2} |psi_00>
    auto mx1 = pauli_matrix(images[0]);
    auto mx2 = pauli_matrix(images[2]);
    std::array<cd, 16> u{};
    for (int b = 0; b < 4; ++b) {
        std::array<cd, 4> col = psi;
        if (b & 1) {
            std::array<cd, 4> t{};
            for (int i = 0; i < 4; ++i) {
                for (int k = 0; k < 4; ++k) t[i] += mx1[i * 4 + k] * col[k];
            }
            col = t;
        }
        if (b & 2) {
            std::array<cd, 4> t{};
            for (int i = 0; i < 4; ++i) {
                for (int k = 0; k < 4; ++k) t[i] += mx2[i * 4 + k] * col[k];
            }
            col = t;
        }
        for (int i = 0; i < 4; ++i) u[i * 4 + b] = col[i];
    }
    return u;
}

Clifford2 random_clifford2(core::Rng& rng) {
    auto pick_stagewise = [&](auto&& pred) -> uint8_t {
        uint8_t valid[16];
        int count = 0;
        for (int xz = 1; xz < 16; ++xz) {
            if (pred(static_cast<uint8_t>(xz))) valid[count++] = static_cast<uint8_t>(xz);
        }
        return valid[rng.next_below(static_cast<uint64_t>(count))];
    };

    Clifford2 g;
    uint8_t x1 = pick_stagewise([](uint8_t) { return true; });  // 15 choices
    uint8_t z1 = pick_stagewise([&](uint8_t c) { return symplectic_product(c, x1) == 1; });  // 8
    uint8_t x2 = pick_stagewise([&](uint8_t c) {
        return symplectic_product(c, x1) == 0 && symplectic_product(c, z1) == 0;
    });  // 3
    uint8_t z2 = pick_stagewise([&](uint8_t c) {
        return symplectic_product(c, x1) == 0 && symplectic_product(c, z1) == 0 &&
               symplectic_product(c, x2) == 1;
    });  // 2
    uint8_t codes[4] = {x1, z1, x2, z2};
    for (int i = 0; i < 4; ++i) {
        g.images[i] = Pauli2{codes[i], static_cast<uint8_t>(rng.next_below(2) * 2)};
    }
    return g;
}

}  // namespace stabcore
