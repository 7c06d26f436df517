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

#ifndef IEXSIM_STABCORE_CLIFFORD2_HPP
#define IEXSIM_STABCORE_CLIFFORD2_HPP

#include <array>
#include <complex>
#include <cstdint>

#include "core/rng.hpp"

namespace stabcore {

/// Two-qubit Pauli in Hermitian form: i^phase * W(x1,z1) (x) W(x2,z2),
/// with W(x,z) = i^{xz} X^x Z^z in {I, X, Y, Z}. Bit layout of xz:
/// bit0 = x1, bit1 = z1, bit2 = x2, bit3 = z2.
struct Pauli2 {
    uint8_t xz = 0;
    uint8_t phase = 0;  // exponent of i, mod 4

    static Pauli2 x1() { return {0b0001, 0}; }
    static Pauli2 z1() { return {0b0010, 0}; }
    static Pauli2 x2() { return {0b0100, 0}; }
    static Pauli2 z2() { return {0b1000, 0}; }

    bool operator==(const Pauli2&) const = default;
};

Pauli2 pauli_mul(const Pauli2& a, const Pauli2& b);
/// 0 if the operators commute, 1 if they anticommute (phases ignored).
int symplectic_product(uint8_t a_xz, uint8_t b_xz);
/// 4x4 matrix, row-major, basis index = 2*b2 + b1 (qubit 1 is the low bit).
std::array<std::complex<double>, 16> pauli_matrix(const Pauli2& p);

/// A two-qubit Clifford element stored as the conjugation images of the four
/// Pauli generators. Sign conventions make every image Hermitian (phase 0 or 2).
struct Clifford2 {
    // images of X1, Z1, X2, Z2 under U P U^dagger
    std::array<Pauli2, 4> images;

    /// Conjugate an arbitrary two-qubit Pauli through the gate.
    Pauli2 conjugate(const Pauli2& p) const;

    Clifford2 inverse() const;

    /// The unique (up to global phase) 4x4 unitary with these images; the phase
    /// is fixed canonically so both simulators build the identical matrix.
    std::array<std::complex<double>, 16> to_matrix() const;

    bool operator==(const Clifford2&) const = default;
};

/// Uniform over all 11520 two-qubit Cliffords; deterministic in the rng stream.
/// Stage-wise sampling with exact per-stage counts (15*2 * 8*2 * 3*2 * 2*2).
Clifford2 random_clifford2(core::Rng& rng);
inline Clifford2 random_clifford2(uint64_t seed_path) {
    core::Rng rng(seed_path);
    return random_clifford2(rng);
}

}  // namespace stabcore

#endif
