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

#ifndef IEXSIM_POTTSRBC_LATTICE_HPP
#define IEXSIM_POTTSRBC_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace pottsrbc {

/// The paper's eta = 1 (a transduction happened) means the bond is broken.
/// Internally a bond stores "present" = no transduction, matching standard
/// cluster-algorithm conventions; eta(edge) = !present(edge) at the API edge.
enum class BoundaryTag : uint8_t { free_spin, fixed_plus, fixed_identity };

struct RbcParams {
    int h = 1;               // cluster weight (number of Potts states)
    double nu = 0.5;         // bond probability
    int sweeps = 1000;
    int thermalization = 100;
    int measure_stride = 1;
    uint64_t seed = 0;
};

/// Brickwork vertex graph: bricks of an L-site, T-layer circuit with periodic
/// x. Row parity alternates the site pairing, so each brick joins two bricks
/// above and two below (a 45-degree square lattice). One candidate edge per
/// (site, row gap) = the transduction slot.
class RbcLattice {
  public:
    struct Edge {
        int u, v;      // u in row t, v in row t+1
        int dx;        // column displacement (for wrapping detection)
    };

    RbcLattice(int sites, int rows, std::vector<BoundaryTag> final_row_tags = {});

    int sites() const { return L_; }
    int width() const { return width_; }
    int rows() const { return rows_; }
    int num_vertices() const { return width_ * rows_; }
    int vertex(int row, int col) const { return row * width_ + col; }
    int brick_col(int row, int site) const;

    const std::vector<Edge>& edges() const { return edges_; }
    std::vector<uint8_t>& bonds() { return bond_present_; }
    const std::vector<uint8_t>& bonds() const { return bond_present_; }
    std::vector<int>& spins() { return spin_; }
    const std::vector<int>& spins() const { return spin_; }
    BoundaryTag tag(int v) const { return tag_[v]; }

    /// Fixed-spin value demanded by a tag (identity -> 0, plus -> 1).
    static int fixed_value(BoundaryTag t) { return t == BoundaryTag::fixed_plus ? 1 : 0; }

    std::string to_json() const;  // debug snapshot

  private:
    int L_, width_, rows_;
    std::vector<Edge> edges_;
    std::vector<uint8_t> bond_present_;
    std::vector<int> spin_;
    std::vector<BoundaryTag> tag_;
};

/// build_lattice(L, T): all-free boundaries unless ps_sites is nonempty, in
/// which case final-row bricks meeting P_S get the (+1)-type fixed tag and the
/// remaining final-row bricks the identity-type tag. Initial row stays free
/// (pure input).
RbcLattice build_lattice(int sites, int rows, const std::vector<int>& ps_sites = {});

/// Renormalized bond probabilities from the transduction rate p.
double nu_from_p(double p, int q, int n);
double nu_prime_from_p(double p, int q, int n);

}  // namespace pottsrbc

#endif
