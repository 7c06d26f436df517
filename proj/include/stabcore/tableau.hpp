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

#ifndef IEXSIM_STABCORE_TABLEAU_HPP
#define IEXSIM_STABCORE_TABLEAU_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stabcore/clifford2.hpp"

namespace stabcore {

/// Pure-state stabilizer tableau: N generator rows over N qubits, each row a
/// 2N-bit (X part, Z part) vector plus a sign bit. Rows are word-packed;
/// columns grow lazily with amortized-doubling word capacity.
class StabTableau {
  public:
    explicit StabTableau(int num_qubits = 0);

    int num_qubits() const { return n_; }

    /// Appends a fresh qubit in |0> and returns its column index.
    int add_zero_qubit();
    /// Appends two fresh qubits in a Bell pair (|00>+|11>)/sqrt(2).
    std::pair<int, int> add_bell_pair();

    void apply_h(int q);
    void apply_s(int q);
    void apply_cnot(int control, int target);
    void apply_swap(int a, int b);
    void apply_clifford2(const Clifford2& gate, int qa, int qb);

    /// S(region) in bits: rank of the generator matrix restricted to the
    /// region's X/Z columns, minus |region|. Bit-packed Gaussian elimination.
    int entropy_region(std::span<const int> region) const;
    /// Same, but computed on whichever of region/complement is smaller
    /// (equal for a pure global state).
    int entropy_region_min_side(std::span<const int> region) const;

    /// Symplectic pairwise commutation + full GF(2) rank. O(N^2) — debug use.
    bool check_invariants() const;

    std::string debug_hex() const;

    bool x_bit(int row, int col) const { return bit(xbits_, row, col); }
    bool z_bit(int row, int col) const { return bit(zbits_, row, col); }
    bool sign_bit(int row) const { return sign_[row] != 0; }

    bool operator==(const StabTableau& other) const;

  private:
    bool bit(const std::vector<uint64_t>& v, int row, int col) const {
        return (v[static_cast<size_t>(row) * words_ + (col >> 6)] >> (col & 63)) & 1;
    }
    void set_bit(std::vector<uint64_t>& v, int row, int col, bool val) {
        uint64_t& w = v[static_cast<size_t>(row) * words_ + (col >> 6)];
        uint64_t mask = 1ULL << (col & 63);
        w = val ? (w | mask) : (w & ~mask);
    }
    void grow(int new_qubits);

    int n_ = 0;
    size_t words_ = 1;  // words per row per half (X or Z)
    std::vector<uint64_t> xbits_, zbits_;
    std::vector<uint8_t> sign_;
};

}  // namespace stabcore

#endif
