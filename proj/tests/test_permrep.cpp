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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "permrep/brick_weight.hpp"
#include "permrep/json_export.hpp"
#include "permrep/perm.hpp"
#include "permrep/rational.hpp"
#include "permrep/replica_sets.hpp"
#include "permrep/weingarten.hpp"

using namespace permrep;

namespace {

// ---- independent test oracles ------------------------------------------------

// Full |G| x |G| rational Gaussian inversion of the Gram matrix; deliberately
// separate from the class-algebra path used by the library.
std::vector<std::vector<Rational>> oracle_invert_gram(int d, int m) {
    auto elems = all_perms(m);
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a[i][j] = rational_pow(Rational(d),
                                   static_cast<unsigned>(compose(elems[i], elems[j].inverse()).cycle_count()));
        }
        a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r) {
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        }
        REQUIRE(piv >= 0);
        std::swap(a[col], a[piv]);
        Rational ip = Rational(1) / a[col][col];
        for (int c = 0; c < 2 * n; ++c) a[col][c] *= ip;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (int c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    }
    return inv;
}

// Raw centralizer counter working on plain index arrays (no Perm machinery).
int oracle_centralizer_size(int n) {
    const int m = 2 * n;
    std::vector<int> s(m);
    for (int i = 0; i < n; ++i) {
        s[i] = n + i;
        s[n + i] = i;
    }
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    int count = 0;
    do {
        bool ok = true;
        for (int x = 0; x < m && ok; ++x) ok = (p[s[x]] == s[p[x]]);
        if (ok) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

// Tiny dense polynomial in d with rational coefficients, for the symbolic check.
struct Poly {
    std::vector<Rational> c;  // c[k] * d^k
    static Poly power(int k) {
        Poly p;
        p.c.assign(k + 1, Rational(0));
        p.c[k] = 1;
        return p;
    }
    Poly operator*(const Poly& o) const {
        Poly r;
        r.c.assign(c.size() + o.c.size() - 1, Rational(0));
        for (size_t i = 0; i < c.size(); ++i) {
            for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
        }
        return r;
    }
    Poly operator-(const Poly& o) const {
        Poly r = *this;
        if (o.c.size() > r.c.size()) r.c.resize(o.c.size(), Rational(0));
        for (size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
        return r;
    }
    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; });
    }
};

}  // namespace

TEST_CASE("compose follows the right-multiplication convention") {
    // (1 2)(2 3) = (1 2 3)
    Perm p = Perm::from_cycle_string(3, "(1 2)");
    Perm q = Perm::from_cycle_string(3, "(2 3)");
    CHECK(compose(p, q) == Perm::from_cycle_string(3, "(1 2 3)"));
    CHECK(compose(p, Perm::identity(3)) == p);
    CHECK(compose(p, p) == Perm::identity(3));
}

TEST_CASE("cycle counting") {
    CHECK(Perm::identity(4).cycle_count() == 4);
    Perm p = Perm::from_cycle_string(5, "(1 3)(2 5 4)");
    CHECK(p.cycle_count() == 2);
    CHECK(p.cycle_type() == std::vector<int>{3, 2});
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> pts(n);
        std::iota(pts.begin(), pts.end(), 0);
        CHECK(Perm::from_cycle(n, pts).cycle_count() == 1);
    }
}

TEST_CASE("group axioms exhaustively for S_n, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        auto elems = all_perms(n);
        const Perm id = Perm::identity(n);
        for (const Perm& a : elems) {
            CHECK(compose(a, id) == a);
            CHECK(compose(id, a) == a);
            CHECK(compose(a, a.inverse()) == id);
            CHECK(compose(a.inverse(), a) == id);
        }
        // associativity: (ab)c == a(bc); n = 5 covers 1.7M triples
        size_t bad = 0;
        for (const Perm& a : elems) {
            for (const Perm& b : elems) {
                const Perm ab = compose(a, b);
                for (const Perm& c : elems) {
                    if (compose(ab, c) != compose(a, compose(b, c))) ++bad;
                }
            }
        }
        CHECK(bad == 0);
    }
}

TEST_CASE("lex rank round-trips and matches enumeration order") {
    auto elems = all_perms(4);
    for (size_t i = 0; i < elems.size(); ++i) {
        CHECK(elems[i].lex_rank() == i);
        CHECK(Perm::from_lex_rank(4, i) == elems[i]);
    }
}

TEST_CASE("cycle string round trip") {
    for (const Perm& p : all_perms(5)) {
        CHECK(Perm::from_cycle_string(5, p.cycle_string()) == p);
    }
    CHECK(Perm::identity(3).cycle_string() == "()");
}

TEST_CASE("gram matrix basics") {
    auto g1 = gram_matrix(5, 1);
    CHECK(g1.entry(0, 0) == 5);

    // n = 2 by hand: diagonal d^2, off-diagonal d.
    auto g2 = gram_matrix(3, 2);
    CHECK(g2.entry(0, 0) == 9);
    CHECK(g2.entry(0, 1) == 3);
    CHECK(g2.entry(1, 1) == 9);

    // tau = sigma anywhere -> d^n; symmetry everywhere.
    for (int m = 2; m <= 4; ++m) {
        auto g = gram_matrix(2, m);
        const int order = g.group().order();
        Rational diag = rational_pow(Rational(2), static_cast<unsigned>(m));
        for (int i = 0; i < order; ++i) {
            CHECK(g.entry(i, i) == diag);
            for (int j = 0; j < i; ++j) CHECK(g.entry(i, j) == g.entry(j, i));
        }
    }
    CHECK_THROWS_AS(gram_matrix(2, 7), capacity_error);
}

TEST_CASE("weingarten: frozen n=2,d=2 values and defining relation") {
    auto w = weingarten_table(2, 2);
    CHECK(w.entry(Perm::identity(2), Perm::identity(2)) == Rational(1) / 3);
    CHECK(w.entry(Perm::identity(2), Perm::transposition(2, 0, 1)) == Rational(-1) / 6);

    // n = 1: scalar inverse 1/d.
    for (int d = 2; d <= 6; ++d) {
        CHECK(weingarten_table(d, 1).entry(0, 0) == Rational(1) / d);
    }
}

TEST_CASE("weingarten matches the independent full-matrix inversion oracle") {
    for (int m = 2; m <= 4; ++m) {
        for (int d = 2; d <= 6; ++d) {
            if (d < m) continue;  // singular; covered below
            auto oracle = oracle_invert_gram(d, m);
            auto w = weingarten_table(d, m);
            const int order = w.group().order();
            for (int i = 0; i < order; ++i) {
                for (int j = 0; j < order; ++j) CHECK(w.entry(i, j) == oracle[i][j]);
            }
        }
    }
}

TEST_CASE("weingarten inversion identity holds exactly for invertible (d, m)") {
    for (int m = 2; m <= 4; ++m) {
        for (int d = 2; d <= 6; ++d) {
            if (d < m) continue;
            CHECK(verify_inversion(gram_matrix(d, m), weingarten_table(d, m)));
        }
    }
}

TEST_CASE("gram matrix is singular exactly when d < m") {
    CHECK_THROWS_AS(weingarten_table(2, 3), degeneracy_error);
    CHECK_THROWS_AS(weingarten_table(2, 4), degeneracy_error);
    CHECK_THROWS_AS(weingarten_table(3, 4), degeneracy_error);
    CHECK_THROWS_AS(weingarten_table(5, 6), degeneracy_error);
    CHECK_NOTHROW(weingarten_table(4, 4));
    CHECK_NOTHROW(weingarten_table(3, 3));
}

TEST_CASE("symbolic gram spot-check: S_2 inversion identity as polynomials in d") {
    auto g = gram_matrix_symbolic(2);
    CHECK(g.is_symbolic());
    // Q = [[d^2, d], [d, d^2]]; adj = [[d^2, -d], [-d, d^2]]; Q*adj = det * I.
    Poly q00 = Poly::power(g.exponent(0, 0));
    Poly q01 = Poly::power(g.exponent(0, 1));
    Poly det = q00 * q00 - q01 * q01;
    Poly zero = q00 * q01 - q01 * q00;
    CHECK((q00 * q00 - q01 * q01 - det).is_zero());
    CHECK(zero.is_zero());
    // symmetry of exponents up to m = 6
    for (int m = 2; m <= 6; ++m) {
        auto gs = gram_matrix_symbolic(m);
        const int order = gs.group().order();
        for (int i = 0; i < order; i += std::max(1, order / 40)) {
            for (int j = 0; j < order; j += std::max(1, order / 40)) {
                CHECK(gs.exponent(i, j) == gs.exponent(j, i));
            }
        }
    }
}

TEST_CASE("centralizer of s_alpha: sizes and brute-force oracle") {
    CHECK(centralizer_of_swap(1).size() == 2);
    CHECK(centralizer_of_swap(2).size() == 8);
    CHECK(centralizer_of_swap(3).size() == 48);
    for (int n = 1; n <= 3; ++n) {
        CHECK(static_cast<int>(centralizer_of_swap(n).size()) == oracle_centralizer_size(n));
    }
    CHECK(centralizer_of_swap(4).size() == 384);  // 2^n n!
    CHECK_THROWS_AS(centralizer_of_swap(6), capacity_error);

    // membership is closed under the defining relation
    const Perm s = s_alpha(2);
    for (const Perm& g : centralizer_of_swap(2)) CHECK(conjugate(g, s) == s);
}

TEST_CASE("W+ set: frozen h values, identity membership, (-1) membership report") {
    const int expected_h[] = {0, 1, 2, 5, 14};  // Catalan numbers
    for (int n = 1; n <= 4; ++n) {
        auto wp = w_plus_set(n);
        CHECK(wp.h == expected_h[n]);
        CHECK(std::find(wp.elements.begin(), wp.elements.end(), Perm::identity(2 * n)) != wp.elements.end());
        if (n >= 3) {
            int fact = 1;
            for (int i = 2; i <= n; ++i) fact *= i;
            CHECK(wp.h < fact);
        }
        bool minus_one_in = std::find(wp.elements.begin(), wp.elements.end(), shift_both(n, -1)) !=
                            wp.elements.end();
        // enumeration is the arbiter: (-1) qualifies only at n <= 2
        CHECK(minus_one_in == (n <= 2));
        MESSAGE("n=", n, ": h=", wp.h, ", (-1) in W+: ", std::string(minus_one_in ? "yes" : "no"));
    }
    CHECK_THROWS_AS(w_plus_set(6), capacity_error);
}

TEST_CASE("max cycle bound equals n+1") {
    CHECK(max_cycle_bound(1) == 2);
    CHECK(max_cycle_bound(2) == 3);
    CHECK(max_cycle_bound(3) == 4);
    CHECK(max_cycle_bound(4) == 5);
}

TEST_CASE("symmetric cycle decomposition") {
    ReplicaLabeling lab2(2);
    // length-2 cycle (a1 b1): c1 = c2 = identity, r = 1
        {
        Perm c = Perm::transposition(4, lab2.a(0), lab2.b(0));
        auto dec = symmetric_cycle_decompose(c, lab2);
        CHECK(dec.c1.is_identity());
        CHECK(dec.c2.is_identity());
        CHECK(dec.r == 1);
        CHECK(compose(Perm::transposition(4, dec.r - 1, lab2.n + dec.r - 1), compose(dec.c1, dec.c2)) == c);
    }
    // (a1 a2 b1 b2) recomposes exactly
    {
        Perm c = Perm::from_cycle(4, {lab2.a(0), lab2.a(1), lab2.b(0), lab2.b(1)});
        auto dec = symmetric_cycle_decompose(c, lab2);
        Perm recomposed = compose(Perm::transposition(4, dec.r - 1, lab2.n + dec.r - 1),
                                  compose(dec.c1, dec.c2));
        CHECK(recomposed == c);
        CHECK(dec.c2 == conjugate(s_alpha(2), dec.c1));
    }
    // exhaustive over all symmetric single cycles in S_4 and S_6
    for (int n : {2, 3}) {
        ReplicaLabeling lab(n);
        const Perm s = s_alpha(n);
        int checked = 0;
        for (const Perm& c : all_perms(2 * n)) {
            int support = 0;
            for (int x = 0; x < 2 * n; ++x) {
                if (c(x) != x) ++support;
            }
            auto type = c.cycle_type();
            bool single_cycle = support > 0 && type.front() == support;
            if (!single_cycle || support % 2 != 0 || conjugate(s, c) != c) continue;
            auto dec = symmetric_cycle_decompose(c, lab);
            Perm recomposed = compose(Perm::transposition(2 * n, dec.r - 1, lab.n + dec.r - 1),
                                      compose(dec.c1, dec.c2));
            CHECK(recomposed == c);
            CHECK(dec.c2 == conjugate(s, dec.c1));
            for (int x = 0; x < 2 * n; ++x) {
                CHECK((dec.c1(x) == x || dec.c2(x) == x));  // disjoint supports
            }
            ++checked;
        }
        CHECK(checked > 0);
        MESSAGE("n=", n, ": verified ", checked, " symmetric cycles");
    }
    // structural errors
    CHECK_THROWS_AS(symmetric_cycle_decompose(Perm::from_cycle_string(4, "(1 2)"), lab2),
                    std::invalid_argument);
    CHECK_THROWS_AS(symmetric_cycle_decompose(compose(Perm::from_cycle_string(4, "(1 3)"),
                                                      Perm::from_cycle_string(4, "(2 4)")),
                                              lab2),
                    std::invalid_argument);
}

TEST_CASE("brick weight: frozen n=1, q=2 values") {
    const Perm id2 = Perm::identity(2);
    const Perm sw2 = Perm::transposition(2, 0, 1);
    CHECK(brick_weight(2, 1, id2, id2) == Rational(1) / 15);
    CHECK(brick_weight(2, 1, id2, sw2) == Rational(-1) / 60);
    CHECK(brick_weight(2, 1, sw2, id2) == Rational(-1) / 60);
    CHECK(brick_weight(2, 1, sw2, sw2) == Rational(1) / 15);

    auto table = brick_weight_table(2, 1);
    CHECK(table[0][0] == Rational(1) / 15);
    CHECK(table[0][1] == Rational(-1) / 60);
}

TEST_CASE("brick weight table agrees with per-pair sums (n=2)") {
    auto table = brick_weight_table(2, 2);
    auto group = SymmetricGroup::shared(4);
    for (int i = 0; i < 24; i += 7) {
        for (int j = 0; j < 24; j += 5) {
            CHECK(table[i][j] == brick_weight(2, 2, group->element(i), group->element(j)));
        }
    }
}

TEST_CASE("brick weight large-q asymptote, n=1 exact") {
    auto group = SymmetricGroup::shared(2);
    auto cent = centralizer_of_swap(1);
    Rational prev_max = -1;
    for (int q : {2, 4, 8, 16, 32}) {
        auto table = brick_weight_table(q, 1);
        Rational mx = 0;
        Rational q4 = rational_pow(Rational(q), 4);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                bool in_delta = (i == j) && std::find(cent.begin(), cent.end(), group->element(i)) != cent.end();
                Rational dev = abs(q4 * table[i][j] - (in_delta ? 1 : 0));
                if (dev > mx) mx = dev;
            }
        }
        if (prev_max >= 0) CHECK(mx < prev_max);
        prev_max = mx;
    }
    CHECK(prev_max < Rational(1) / 10);
}

TEST_CASE("brick weight float mode tracks exact mode") {
    auto group4 = SymmetricGroup::shared(4);
    for (int q : {2, 4}) {
        for (int i : {0, 3, 11}) {
            for (int j : {0, 5, 17}) {
                Rational exact = brick_weight(q, 2, group4->element(i), group4->element(j));
                double approx = brick_weight_float(q, 2, group4->element(i), group4->element(j));
                double ex = static_cast<double>(exact);
                double scale = std::max(1e-300, std::abs(ex));
                CHECK(std::abs(approx - ex) / scale < 1e-10);
            }
        }
    }
    // n=3, q=2 needs W_g^{4,6}: degenerate, must propagate
    CHECK_THROWS_AS(brick_weight_float(2, 3, Perm::identity(6), Perm::identity(6)), degeneracy_error);
    // n=3, q=3 works in float mode
    double v = brick_weight_float(3, 3, Perm::identity(6), Perm::identity(6));
    CHECK(v > 0);
    CHECK_THROWS_AS(brick_weight(2, 4, Perm::identity(8), Perm::identity(8)), capacity_error);
}

TEST_CASE("n=3 float brick weight matches exact per-pair rational sum") {
    const Perm id6 = Perm::identity(6);
    Rational exact = brick_weight(3, 3, id6, id6);
    double approx = brick_weight_float(3, 3, id6, id6);
    double ex = static_cast<double>(exact);
    CHECK(std::abs(approx - ex) / std::abs(ex) < 1e-10);
}

TEST_CASE("json export formats") {
    auto j = weingarten_to_json(weingarten_table(2, 2));
    CHECK(j["d"] == 2);
    CHECK(j["n"] == 2);
    CHECK(j["values"]["()"] == "1/3");
    CHECK(j["values"]["(1 2)"] == "-1/6");

    auto wp = w_plus_to_json(2);
    CHECK(wp["h"] == 2);
    CHECK(wp["elements"].size() == 2);
}
