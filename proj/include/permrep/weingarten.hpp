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

#ifndef IEXSIM_PERMREP_WEINGARTEN_HPP
#define IEXSIM_PERMREP_WEINGARTEN_HPP

#include <memory>
#include <stdexcept>
#include <vector>

#include "permrep/perm.hpp"
#include "permrep/rational.hpp"
#include "permrep/replica_sets.hpp"

namespace permrep {

struct degeneracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Full tables are quadratic in |S_m|; m = 6 (720 elements) is the largest we build.
inline constexpr int kMaxTableDegree = 6;

/// Canonical table of S_m: elements in lexicographic one-line order plus the
/// conjugacy-class structure needed for Gram/Weingarten work. Immutable.
class SymmetricGroup {
  public:
    explicit SymmetricGroup(int m);

    int degree() const { return m_; }
    int order() const { return static_cast<int>(elems_.size()); }
    const std::vector<Perm>& elements() const { return elems_; }
    const Perm& element(int i) const { return elems_[i]; }
    int index_of(const Perm& p) const { return static_cast<int>(p.lex_rank()); }

    int num_classes() const { return static_cast<int>(class_cycle_count_.size()); }
    int class_of(int i) const { return class_id_[i]; }
    /// Conjugacy class of element(i) * element(j)^{-1}.
    int product_class(int i, int j) const { return pclass_[static_cast<size_t>(i) * order() + j]; }
    /// #cycles(element(i) * element(j)^{-1}).
    int product_cycles(int i, int j) const { return class_cycle_count_[product_class(i, j)]; }
    int class_cycles(int c) const { return class_cycle_count_[c]; }
    int class_size(int c) const { return class_size_[c]; }
    int class_representative(int c) const { return class_rep_[c]; }
    int identity_class() const { return class_id_[0]; }

    static std::shared_ptr<const SymmetricGroup> shared(int m);

  private:
    int m_;
    std::vector<Perm> elems_;
    std::vector<uint16_t> class_id_;
    std::vector<uint8_t> pclass_;
    std::vector<int> class_cycle_count_;
    std::vector<int> class_size_;
    std::vector<int> class_rep_;
};

/// Q^{d,n}(tau, sigma) = d^{#cycles(tau sigma^{-1})} over S_n. d may be symbolic
/// (no integer value fixed), in which case only exponents are available.
class GramMatrix {
  public:
    GramMatrix(std::shared_ptr<const SymmetricGroup> group, int d);  // d >= 2
    static GramMatrix symbolic(std::shared_ptr<const SymmetricGroup> group);

    const SymmetricGroup& group() const { return *group_; }
    int copies() const { return group_->degree(); }
    bool is_symbolic() const { return d_ == 0; }
    int dimension() const;

    int exponent(int i, int j) const { return group_->product_cycles(i, j); }
    Rational entry(int i, int j) const;
    Rational entry(const Perm& tau, const Perm& sigma) const;

  private:
    std::shared_ptr<const SymmetricGroup> group_;
    int d_;  // 0 = symbolic
};

/// W_g^{d,n}: the exact rational inverse of the Gram matrix. Because Q(tau,sigma)
/// depends only on the conjugacy class of tau sigma^{-1}, the inverse is computed
/// in the center of the group algebra (one value per class).
class WeingartenTable {
  public:
    WeingartenTable(std::shared_ptr<const SymmetricGroup> group, int d);

    const SymmetricGroup& group() const { return *group_; }
    int copies() const { return group_->degree(); }
    int dimension() const { return d_; }

    const Rational& value_for_class(int c) const { return by_class_[c]; }
    const Rational& entry(int i, int j) const { return by_class_[group_->product_class(i, j)]; }
    Rational entry(const Perm& tau, const Perm& sigma) const;

  private:
    std::shared_ptr<const SymmetricGroup> group_;
    int d_;
    std::vector<Rational> by_class_;
};

/// gram_matrix(d, n): full |S_n| x |S_n| table of d^{#cycles(tau sigma^{-1})}.
/// Throws capacity_error for n > 6.
GramMatrix gram_matrix(int d, int n);
GramMatrix gram_matrix_symbolic(int n);

/// weingarten_table(d, n): exact inverse; throws degeneracy_error when the Gram
/// matrix is singular (exactly when d < n) and capacity_error for n > 6.
WeingartenTable weingarten_table(int d, int n);

/// Exact check of sum_p Q(sigma,p) W(p,tau) = delta(sigma,tau) for every pair,
/// via the convolution (f*w)(g) over all g in S_n. Returns true iff it holds.
bool verify_inversion(const GramMatrix& q, const WeingartenTable& w);

}  // namespace permrep

#endif
