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

#include "permrep/weingarten.hpp"

#include <map>
#include <mutex>

namespace permrep {

namespace {

void require_table_cap(int m, const char* what) {
    if (m < 1 || m > kMaxTableDegree) {
        throw capacity_error(std::string(what) + ": degree " + std::to_string(m) +
                             " outside supported range [1, " + std::to_string(kMaxTableDegree) + "]");
    }
}

}  // namespace

SymmetricGroup::SymmetricGroup(int m) : m_(m) {
    require_table_cap(m, "SymmetricGroup");
    elems_ = all_perms(m);
    const int n = order();

    std::map<std::vector<int>, int> class_by_type;
    class_id_.resize(n);
    for (int i = 0; i < n; ++i) {
        auto type = elems_[i].cycle_type();
        auto [it, inserted] = class_by_type.try_emplace(type, static_cast<int>(class_by_type.size()));
        class_id_[i] = static_cast<uint16_t>(it->second);
        if (inserted) {
            class_cycle_count_.push_back(static_cast<int>(type.size()));
            class_size_.push_back(0);
            class_rep_.push_back(i);
        }
    }
    for (int i = 0; i < n; ++i) ++class_size_[class_id_[i]];

    pclass_.resize(static_cast<size_t>(n) * n);
    std::vector<int> inv_index(n);
    for (int i = 0; i < n; ++i) inv_index[i] = index_of(elems_[i].inverse());
    for (int i = 0; i < n; ++i) {
        const Perm& a = elems_[i];
        for (int j = 0; j < n; ++j) {
            Perm prod = compose(a, elems_[inv_index[j]]);
            pclass_[static_cast<size_t>(i) * n + j] = static_cast<uint8_t>(class_id_[index_of(prod)]);
        }
    }
}

std::shared_ptr<const SymmetricGroup> SymmetricGroup::shared(int m) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const SymmetricGroup>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) {
        it = cache.emplace(m, std::make_shared<SymmetricGroup>(m)).first;
    }
    return it->second;
}

GramMatrix::GramMatrix(std::shared_ptr<const SymmetricGroup> group, int d)
    : group_(std::move(group)), d_(d) {
    if (d < 2) throw std::invalid_argument("GramMatrix: dimension must be >= 2");
}

GramMatrix GramMatrix::symbolic(std::shared_ptr<const SymmetricGroup> group) {
    GramMatrix g(std::move(group), 2);
    g.d_ = 0;
    return g;
}

int GramMatrix::dimension() const {
    if (is_symbolic()) throw std::logic_error("GramMatrix: symbolic d has no integer value");
    return d_;
}

Rational GramMatrix::entry(int i, int j) const {
    return rational_pow(Rational(dimension()), static_cast<unsigned>(exponent(i, j)));
}

Rational GramMatrix::entry(const Perm& tau, const Perm& sigma) const {
    return entry(group_->index_of(tau), group_->index_of(sigma));
}

WeingartenTable::WeingartenTable(std::shared_ptr<const SymmetricGroup> group, int d)
    : group_(std::move(group)), d_(d) {
    const SymmetricGroup& g = *group_;
    const int n = g.order();
    const int k = g.num_classes();

    // Solve F * W = e in the center of the group algebra, where
    // F = sum_u d^{#cycles(u)} u and W = sum_j w_j * (indicator of class j).
    // Row i (one per class representative r_i):
    //   sum_u f(u) * w(class(u^{-1} r_i)) = delta(class(r_i) == class(e)).
    std::vector<Rational> f_by_class(k);
    for (int c = 0; c < k; ++c) {
        f_by_class[c] = rational_pow(Rational(d), static_cast<unsigned>(g.class_cycles(c)));
    }

    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k + 1, Rational(0)));
    for (int i = 0; i < k; ++i) {
        const Perm& rep = g.element(g.class_representative(i));
        for (int u = 0; u < n; ++u) {
            // class(u^{-1} r_i) == class((r_i^{-1} u)^{-1}) == class(r_i^{-1} u);
            // pclass(u, rep) gives class(u * rep^{-1}) whose inverse class is the same.
            int c = g.product_class(u, g.index_of(rep));
            a[i][c] += f_by_class[g.class_of(u)];
        }
        a[i][k] = (i == g.identity_class()) ? 1 : 0;
    }

    // Gaussian elimination over exact rationals.
    for (int col = 0; col < k; ++col) {
        int piv = -1;
        for (int r = col; r < k; ++r) {
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) {
            throw degeneracy_error("weingarten_table: Gram matrix is singular for d=" +
                                   std::to_string(d) + ", n=" + std::to_string(g.degree()));
        }
        std::swap(a[col], a[piv]);
        Rational inv_p = Rational(1) / a[col][col];
        for (int c = col; c <= k; ++c) a[col][c] *= inv_p;
        for (int r = 0; r < k; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational factor = a[r][col];
            for (int c = col; c <= k; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    by_class_.resize(k);
    for (int c = 0; c < k; ++c) by_class_[c] = a[c][k];
}

Rational WeingartenTable::entry(const Perm& tau, const Perm& sigma) const {
    return entry(group_->index_of(tau), group_->index_of(sigma));
}

GramMatrix gram_matrix(int d, int n) {
    require_table_cap(n, "gram_matrix");
    return GramMatrix(SymmetricGroup::shared(n), d);
}

GramMatrix gram_matrix_symbolic(int n) {
    require_table_cap(n, "gram_matrix_symbolic");
    return GramMatrix::symbolic(SymmetricGroup::shared(n));
}

WeingartenTable weingarten_table(int d, int n) {
    require_table_cap(n, "weingarten_table");
    if (d < 2) throw std::invalid_argument("weingarten_table: dimension must be >= 2");
    return WeingartenTable(SymmetricGroup::shared(n), d);
}

bool verify_inversion(const GramMatrix& q, const WeingartenTable& w) {
    const SymmetricGroup& g = q.group();
    if (&g != &w.group() || q.dimension() != w.dimension()) return false;
    const int n = g.order();
    // (Q W)(sigma, tau) = sum_u f(u) w(u^{-1} sigma tau^{-1}) depends only on
    // sigma tau^{-1}; checking the convolution at every group element g0 checks
    // every entry of the full |G| x |G| product.
    std::vector<Rational> f_by_class(g.num_classes());
    for (int c = 0; c < g.num_classes(); ++c) {
        f_by_class[c] = rational_pow(Rational(q.dimension()), static_cast<unsigned>(g.class_cycles(c)));
    }
    for (int g0 = 0; g0 < n; ++g0) {
        Rational acc = 0;
        for (int u = 0; u < n; ++u) {
            // w(u^{-1} g0): same class as g0^{-1} u, i.e. product_class(u, g0) inverted.
            acc += f_by_class[g.class_of(u)] * w.value_for_class(g.product_class(u, g0));
        }
        if (acc != ((g0 == 0) ? 1 : 0)) return false;  // element 0 is the identity (lex order)
    }
    return true;
}

}  // namespace permrep
