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

#include "permrep/brick_weight.hpp"

#include <cmath>

namespace permrep {

namespace {

void require_brick_cap(int n, int cap, const char* what) {
    if (n < 1 || n > cap) {
        throw capacity_error(std::string(what) + ": n=" + std::to_string(n) +
                             " outside supported range [1, " + std::to_string(cap) + "]");
    }
}

// Index map i -> index of s_alpha * element(i) * s_alpha.
std::vector<int> swap_conjugation_map(const SymmetricGroup& g, int n) {
    const Perm s = s_alpha(n);
    std::vector<int> out(g.order());
    for (int i = 0; i < g.order(); ++i) {
        out[i] = g.index_of(conjugate(s, g.element(i)));
    }
    return out;
}

}  // namespace

Rational brick_weight(int q, int n, const Perm& sigma, const Perm& tau) {
    require_brick_cap(n, 3, "brick_weight");
    const int m = 2 * n;
    if (sigma.size() != m || tau.size() != m) {
        throw std::invalid_argument("brick_weight: spins must live in S_{2n}");
    }
    auto group = SymmetricGroup::shared(m);
    const SymmetricGroup& g = *group;
    const WeingartenTable wg(group, q * q);  // may throw degeneracy_error
    const std::vector<int> sconj = swap_conjugation_map(g, n);

    const int order = g.order();
    const int is = g.index_of(sigma);
    const int it = g.index_of(tau);
    std::vector<Rational> qpow(m + 1);
    for (int k = 0; k <= m; ++k) qpow[k] = rational_pow(Rational(q), static_cast<unsigned>(k));

    Rational acc = 0;
    for (int tt = 0; tt < order; ++tt) {
        const Rational w1 = wg.entry(is, tt);
        if (w1 == 0) continue;
        const int tts = sconj[tt];
        Rational inner = 0;
        for (int sb = 0; sb < order; ++sb) {
            inner += wg.entry(sb, it) * qpow[g.product_cycles(tt, sb)] * qpow[g.product_cycles(tts, sb)];
        }
        acc += w1 * inner;
    }
    return acc;
}

std::vector<std::vector<Rational>> brick_weight_table(int q, int n) {
    require_brick_cap(n, 2, "brick_weight_table");
    const int m = 2 * n;
    auto group = SymmetricGroup::shared(m);
    const SymmetricGroup& g = *group;
    const WeingartenTable wg(group, q * q);
    const std::vector<int> sconj = swap_conjugation_map(g, n);
    const int order = g.order();

    std::vector<Rational> qpow(m + 1);
    for (int k = 0; k <= m; ++k) qpow[k] = rational_pow(Rational(q), static_cast<unsigned>(k));

    // G1[tt][sb] = Q(tt,sb) Q(s tt s, sb); result = Wg * G1 * Wg (Wg symmetric).
    std::vector<std::vector<Rational>> g1(order, std::vector<Rational>(order));
    for (int tt = 0; tt < order; ++tt) {
        for (int sb = 0; sb < order; ++sb) {
            g1[tt][sb] = qpow[g.product_cycles(tt, sb)] * qpow[g.product_cycles(sconj[tt], sb)];
        }
    }
    std::vector<std::vector<Rational>> tmp(order, std::vector<Rational>(order, Rational(0)));
    for (int i = 0; i < order; ++i) {
        for (int k = 0; k < order; ++k) {
            const Rational& w = wg.entry(i, k);
            if (w == 0) continue;
            for (int j = 0; j < order; ++j) tmp[i][j] += w * g1[k][j];
        }
    }
    std::vector<std::vector<Rational>> out(order, std::vector<Rational>(order, Rational(0)));
    for (int i = 0; i < order; ++i) {
        for (int k = 0; k < order; ++k) {
            if (tmp[i][k] == 0) continue;
            for (int j = 0; j < order; ++j) out[i][j] += tmp[i][k] * wg.entry(k, j);
        }
    }
    return out;
}

double brick_weight_float(int q, int n, const Perm& sigma, const Perm& tau) {
    require_brick_cap(n, 3, "brick_weight_float");
    const int m = 2 * n;
    if (sigma.size() != m || tau.size() != m) {
        throw std::invalid_argument("brick_weight_float: spins must live in S_{2n}");
    }
    auto group = SymmetricGroup::shared(m);
    const SymmetricGroup& g = *group;
    const WeingartenTable wg(group, q * q);
    const std::vector<int> sconj = swap_conjugation_map(g, n);
    const int order = g.order();

    std::vector<double> w_by_class(g.num_classes());
    for (int c = 0; c < g.num_classes(); ++c) {
        w_by_class[c] = static_cast<double>(wg.value_for_class(c));
    }
    std::vector<double> qpow(m + 1);
    for (int k = 0; k <= m; ++k) qpow[k] = std::pow(static_cast<double>(q), k);

    const int is = g.index_of(sigma);
    const int it = g.index_of(tau);
    double acc = 0;
    for (int tt = 0; tt < order; ++tt) {
        const double w1 = w_by_class[g.product_class(is, tt)];
        const int tts = sconj[tt];
        double inner = 0;
        for (int sb = 0; sb < order; ++sb) {
            inner += w_by_class[g.product_class(sb, it)] * qpow[g.product_cycles(tt, sb)] *
                     qpow[g.product_cycles(tts, sb)];
        }
        acc += w1 * inner;
    }
    return acc;
}

std::vector<std::vector<double>> brick_weight_table_float(int q, int n) {
    require_brick_cap(n, 3, "brick_weight_table_float");
    const int m = 2 * n;
    auto group = SymmetricGroup::shared(m);
    const SymmetricGroup& g = *group;
    const int order = g.order();
    std::vector<std::vector<double>> out(order, std::vector<double>(order));
    const WeingartenTable wg(group, q * q);
    const std::vector<int> sconj = swap_conjugation_map(g, n);
    std::vector<double> w_by_class(g.num_classes());
    for (int c = 0; c < g.num_classes(); ++c) {
        w_by_class[c] = static_cast<double>(wg.value_for_class(c));
    }
    std::vector<double> qpow(m + 1);
    for (int k = 0; k <= m; ++k) qpow[k] = std::pow(static_cast<double>(q), k);

    std::vector<std::vector<double>> g1(order, std::vector<double>(order));
    for (int tt = 0; tt < order; ++tt) {
        for (int sb = 0; sb < order; ++sb) {
            g1[tt][sb] = qpow[g.product_cycles(tt, sb)] * qpow[g.product_cycles(sconj[tt], sb)];
        }
    }
    std::vector<std::vector<double>> tmp(order, std::vector<double>(order, 0.0));
    for (int i = 0; i < order; ++i) {
        for (int k = 0; k < order; ++k) {
            const double w = w_by_class[g.product_class(i, k)];
            if (w == 0) continue;
            for (int j = 0; j < order; ++j) tmp[i][j] += w * g1[k][j];
        }
    }
    for (int i = 0; i < order; ++i) {
        for (int k = 0; k < order; ++k) {
            for (int j = 0; j < order; ++j) out[i][j] += tmp[i][k] * w_by_class[g.product_class(k, j)];
        }
    }
    return out;
}

}  // namespace permrep
