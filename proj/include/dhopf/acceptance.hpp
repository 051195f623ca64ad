#pragma once

#include "additive.hpp"
#include "arith_series.hpp"
#include "dirichlet.hpp"
#include "normal_order.hpp"
#include "spectral.hpp"
#include "symfun.hpp"
#include "witt.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace dhopf::acceptance {

struct Outcome {
    bool pass = true;
    std::string detail;

    // Records the first failure message and keeps the verdict sticky.
    void require(bool ok, const std::string &msg) {
        if (!ok && pass) {
            pass = false;
            detail = msg;
        }
    }
};

struct Criterion {
    int id;
    std::string title;
    std::function<Outcome()> run;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

inline std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << s << " s";
    return os.str();
}

// Symmetric polynomial as its coefficients on sorted exponent vectors, i.e.
// its monomial-basis expansion, computed by explicit tableau enumeration.
using Exps = std::vector<unsigned>;
using Poly = std::map<Exps, Integer>;

inline Poly schur_poly_ssyt(const Partition &shape, unsigned k) {
    const auto rows = shape.parts();
    std::vector<std::vector<unsigned>> t;
    for (auto r : rows) t.emplace_back(r, 0);
    Poly out;
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t j) {
        if (i == rows.size()) {
            Exps e(k, 0);
            for (const auto &row : t)
                for (auto x : row) ++e[x - 1];
            out[e] += 1;
            return;
        }
        if (j == rows[i]) {
            fill(i + 1, 0);
            return;
        }
        const unsigned lo = std::max(j ? t[i][j - 1] : 1u, i ? t[i - 1][j] + 1 : 1u);
        for (unsigned x = lo; x <= k; ++x) {
            t[i][j] = x;
            fill(i, j + 1);
        }
    };
    fill(0, 0);
    return out;
}

inline Poly poly_mul(const Poly &a, const Poly &b) {
    Poly out;
    for (const auto &[ea, ca] : a)
        for (const auto &[eb, cb] : b) {
            Exps e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    return out;
}

inline std::map<Partition, Integer> sorted_part(const Poly &p) {
    std::map<Partition, Integer> out;
    for (const auto &[e, c] : p) {
        if (!std::is_sorted(e.rbegin(), e.rend()) || c == 0) continue;
        Exps parts;
        for (auto x : e)
            if (x) parts.push_back(x);
        out[Partition::from_parts(parts)] = c;
    }
    return out;
}

// Peels off the lexicographically largest monomial term against s_pi.
inline SymSum schur_expand_bruteforce(const Partition &a, const Partition &b) {
    const unsigned k = std::max(1u, a.weight() + b.weight());
    auto rest = sorted_part(poly_mul(schur_poly_ssyt(a, k), schur_poly_ssyt(b, k)));
    SymSum out;
    while (!rest.empty()) {
        const auto top = std::prev(rest.end());
        const Partition pi = top->first;
        const Integer c = top->second;
        out.add(pi, Rational(c));
        for (const auto &[q, v] : sorted_part(schur_poly_ssyt(pi, k))) {
            rest[q] -= c * v;
            if (rest[q] == 0) rest.erase(q);
        }
    }
    return out;
}

inline SymSum parse_sym(std::initializer_list<std::pair<long, const char *>> terms) {
    SymSum s;
    for (const auto &[c, p] : terms) s.add(Partition::parse(p), Rational(c));
    return s;
}

} // namespace detail

inline std::vector<Criterion> criteria() {
    using namespace detail;
    std::vector<Criterion> cs;

    cs.push_back({1, "Moebius/zeta inversion to 1e5", [] {
        Outcome o;
        const auto t0 = Clock::now();
        const std::size_t N = 100000;
        const auto prod = series_mul(named_series("moebius", N), named_series("zeta", N));
        const double el = seconds_since(t0);
        o.require(prod == DirichletSeries::unit(N), "moebius * zeta is not the unit series");
        o.require(el < 2.0, "runtime " + fmt_seconds(el) + " exceeds 2 s");
        if (o.pass) o.detail = "runtime " + fmt_seconds(el);
        return o;
    }});

    cs.push_back({2, "zeta^2 and ordered factorization coefficients", [] {
        Outcome o;
        const std::size_t N = 2000;
        const auto z2 = named_series("zeta_squared", N);
        for (std::size_t n = 1; n <= N; ++n) {
            unsigned d = 0;
            for (std::size_t k = 1; k <= n; ++k) d += n % k == 0;
            o.require(z2[n] == d, "zeta^2 coefficient differs from divisor count at " + std::to_string(n));
        }
        const std::vector<long> row{1, 2, 2, 3, 2, 4, 2, 4};
        for (std::size_t i = 0; i < row.size(); ++i)
            o.require(z2[i + 1] == row[i], "zeta^2 coefficient " + std::to_string(i + 1) + " is " +
                                               z2[i + 1].get_str() + ", listed " + std::to_string(row[i]));
        const auto h = named_series("ordered_factorizations", 11);
        const std::vector<long> hrow{1, 1, 1, 2, 1, 3, 4, 2, 3, 1, 8};
        for (std::size_t i = 0; i < hrow.size(); ++i)
            o.require(h[i + 1] == hrow[i], "1/(2 - zeta) coefficient " + std::to_string(i + 1) + " is " +
                                               h[i + 1].get_str() + ", listed " + std::to_string(hrow[i]));
        return o;
    }});

    cs.push_back({3, "antipode closed forms against recursions to 5000", [] {
        Outcome o;
        const std::uint64_t N = 5000;
        const auto smul = antipode_mul_table(N);
        const auto sun = antipode_unrenorm_table(N);
        for (std::uint64_t n = 1; n <= N; ++n) {
            const Rational cm = Rational(static_cast<unsigned long>(n)) * moebius_u64(n);
            o.require(smul[n] == cm, "S(n) != n mu(n) at " + std::to_string(n));
            const Rational cu = Rational(static_cast<unsigned long>(n)) * (omega_grade(Nat(n)) % 2 ? -1 : 1);
            o.require(sun[n] == cu, "unrenormalized antipode mismatch at " + std::to_string(n));
        }
        o.require(antipode_mul(Nat(4)) == 0, "S(4) != 0");
        o.require(antipode_mul(Nat(6)) == 6, "S(6) != 6");
        o.require(antipode_unrenorm(Nat(8)) == -8, "unrenormalized S(8) != -8");
        return o;
    }});

    cs.push_back({4, "cocycle dichotomy", [] {
        Outcome o;
        const std::uint64_t N = 200;
        const std::vector<Cochain> samples{cochains::moebius(), cochains::power(0), cochains::power(1),
                                           cochains::power(2), cochains::liouville()};
        for (const auto &phi : samples) {
            const Cochain tab = phi.tabulate(1, N);
            const Cochain inv = dirichlet_inverse(tab, N * N);
            bool done = false;
            for (std::uint64_t n = 1; n <= N && !done; ++n)
                for (std::uint64_t m = 1; m <= N && !done; ++m) {
                    const Rational v = coboundary2_mul(tab, inv, Nat(n), Nat(m));
                    if (v != ((n == 1 && m == 1) ? 1 : 0)) {
                        o.require(false, "d2(" + phi.name() + ")(" + std::to_string(n) + "," + std::to_string(m) +
                                             ") = " + v.get_str() + ", not the counit");
                        done = true;
                    }
                }
        }
        const TwoCochain dz = coboundary2_table(cochains::zeta(), 20);
        o.require(!(dz == TwoCochain::counit(20)), "d2(zeta) is trivial on 1..20");
        return o;
    }});

    cs.push_back({5, "compatibility failure witnesses", [] {
        Outcome o;
        const auto add = additive_compatibility(Nat(2), Nat(3));
        o.require(!add.equal && !(add.lhs == add.rhs), "additive witness on 2 (+) 3 compares equal");
        const auto mul = bialgebra_counterexample();
        o.require(mul.lhs.coeff({Nat(2), Nat(2)}) == 1, "lhs coefficient of 2 (x) 2 is not 1");
        o.require(mul.rhs.coeff({Nat(2), Nat(2)}) == 2, "rhs coefficient of 2 (x) 2 is not 2");
        o.require(!mul.equal, "multiplicative witness compares equal");
        return o;
    }});

    cs.push_back({6, "circle product examples and polynomial oracle", [] {
        Outcome o;
        const auto P = Partition::parse;
        const std::vector<std::tuple<const char *, const char *, SymSum>> ex{
            {"1", "1", parse_sym({{2, "1,1"}, {1, "2"}})},
            {"5", "2,2", parse_sym({{1, "5,2,2"}, {1, "7,2"}})},
            {"1,1,1", "1,1", parse_sym({{1, "2,2,1"}, {2, "2,1,1"}, {10, "1,1,1,1,1"}})},
        };
        for (const auto &[a, b, want] : ex) {
            const SymSum got = circle_product(P(a), P(b));
            o.require(got == want, "m" + P(a).str() + " o m" + P(b).str() + " = " + render(got) + ", expected " +
                                       render(want));
        }
        const auto t0 = Clock::now();
        std::size_t pairs = 0;
        for (unsigned w = 0; w <= 7; ++w)
            for (unsigned wa = 0; wa <= w; ++wa)
                for (const auto &a : partitions_of(wa))
                    for (const auto &b : partitions_of(w - wa)) {
                        ++pairs;
                        if (circle_product(a, b) != monomial_oracle(a, b, std::max(1u, w)))
                            o.require(false, "oracle mismatch for m" + a.str() + " o m" + b.str());
                    }
        const double el = seconds_since(t0);
        o.require(el < 30.0, "oracle sweep took " + fmt_seconds(el));
        if (o.pass) o.detail = std::to_string(pairs) + " pairs in " + fmt_seconds(el);
        return o;
    }});

    cs.push_back({7, "Littlewood-Richardson via Kostka basis change", [] {
        Outcome o;
        std::size_t pairs = 0;
        for (unsigned w = 0; w <= 6; ++w)
            for (unsigned wa = 0; wa <= w; ++wa)
                for (const auto &a : partitions_of(wa))
                    for (const auto &b : partitions_of(w - wa)) {
                        ++pairs;
                        const SymSum lr = schur_product_lr(a, b);
                        for (const auto &kv : lr)
                            o.require(is_integral(kv.second) && sgn(kv.second) > 0,
                                      "non-positive or non-integral coefficient in s" + a.str() + " s" + b.str());
                        o.require(lr == schur_expand_bruteforce(a, b),
                                  "brute-force mismatch for s" + a.str() + " s" + b.str());
                    }
        if (o.pass) o.detail = std::to_string(pairs) + " pairs";
        return o;
    }});

    cs.push_back({8, "normal ordering, Stirling numbers, Rota-Baxter", [] {
        Outcome o;
        using M = NormalMonomial;
        auto sum = [](std::initializer_list<std::pair<long, M>> ts) {
            OperatorSum s;
            for (const auto &[c, m] : ts) s.add(m, Rational(c));
            return s;
        };
        o.require(circle_op(M{0, 1}, M{1, 0}) == sum({{1, M{1, 1}}, {1, M{0, 0}}}), "a o a+");
        o.require(circle_op(M{1, 1}, M{1, 1}) == sum({{1, M{2, 2}}, {1, M{1, 1}}}), ":a+a: o :a+a:");
        o.require(circle_op(M{1, 1}, M{2, 2}) == sum({{1, M{3, 3}}, {2, M{2, 2}}}), ":a+a: o :a+^2a^2:");
        for (unsigned n = 1; n <= 10; ++n) {
            o.require(circle_op(M{0, 1}, M{n, 0}) == sum({{static_cast<long>(n), M{n - 1, 0}}, {1, M{n, 1}}}),
                      ":a: o :a+^n: at n=" + std::to_string(n));
            if (n >= 2) {
                OperatorSum want = sum({{2 * static_cast<long>(n), M{n - 1, 1}}, {1, M{n, 2}}});
                want.add(M{n - 2, 0}, Rational(2 * binomial(n, 2)));
                o.require(circle_op(M{0, 2}, M{n, 0}) == want, ":a^2: o :a+^n: at n=" + std::to_string(n));
            }
        }
        const auto rec = stirling2_recurrence(12);
        for (unsigned n = 0; n <= 12; ++n) {
            const auto circ = stirling2_from_circle(n);
            for (unsigned k = 0; k <= n; ++k) {
                const Integer closed = stirling2(n, k);
                o.require(closed == rec[n][k] && closed == circ[k],
                          "Stirling disagreement at (" + std::to_string(n) + "," + std::to_string(k) + ")");
            }
        }
        const OperatorSum one(M{}, 1);
        const OperatorSum r1 = rota_baxter_R(one);
        const OperatorSum cube = circle_power(r1, 3);
        const OperatorSum rhs = rota_baxter_power(3) * Rational(6) + rota_baxter_power(2) * Rational(6) + r1;
        o.require(cube == rhs, "R(1)^3 != 6R^3(1) + 6R^2(1) + R(1)");
        for (unsigned n = 1; n <= 8; ++n) o.require(main_theorem_check(n), "main theorem fails at n=" + std::to_string(n));
        for (unsigned n = 0; n <= 10; ++n)
            for (unsigned m = 0; m <= 10; ++m)
                o.require(inner_product(n, m) == (n == m ? 1 : 0),
                          "inner product <" + std::to_string(n) + "|" + std::to_string(m) + ">");
        return o;
    }});

    cs.push_back({9, "Witt vectors", [] {
        Outcome o;
        const auto up = universal_polys(6);
        const MultiPoly w1 = MultiPoly::var('w', 1), w2 = MultiPoly::var('w', 2);
        const MultiPoly v1 = MultiPoly::var('v', 1), v2 = MultiPoly::var('v', 2);
        o.require(up.F[1] == w2 + v2 - w1 * v1, "F2 = " + up.F[1].str());
        std::mt19937_64 rng(20240607);
        std::uniform_int_distribution<long> dist(-9, 9);
        for (int trial = 0; trial < 500; ++trial) {
            WittVector u(6), v(6);
            for (auto &x : u) x = dist(rng);
            for (auto &x : v) x = dist(rng);
            const auto gu = ghost(u), gv = ghost(v);
            const auto gs = ghost(witt_add(u, v)), gp = ghost(witt_mul(u, v));
            for (std::size_t i = 0; i < 6; ++i) {
                o.require(gs[i] == gu[i] + gv[i], "ghost not additive");
                o.require(gp[i] == gu[i] * gv[i], "ghost not multiplicative");
            }
        }
        const auto e = witt_symbols('e', 5);
        const auto w = e_to_w(e, 5);
        const auto E = [&](unsigned i) { return e[i - 1]; };
        const std::vector<MultiPoly> listed{
            E(1),
            -E(2),
            E(3) + E(1) * E(2),
            -E(4) + E(3) * E(1) + E(2) * E(1) * E(1),
            E(5) - E(4) * E(1) - E(3) * E(2) - E(1) * E(2) * E(2) + E(1) * E(1) * E(3) + E(1) * E(1) * E(1) * E(2),
        };
        for (std::size_t i = 0; i < listed.size(); ++i)
            o.require(w[i] == listed[i], "w" + std::to_string(i + 1) + " = " + w[i].str() + ", listed " +
                                             listed[i].str());
        return o;
    }});

    cs.push_back({10, "exponentiation bridge to 2000", [] {
        Outcome o;
        for (std::uint64_t n = 1; n <= 2000; ++n)
            o.require(check_exponentiation_relation(Nat(n)), "mismatch at " + std::to_string(n));
        return o;
    }});

    cs.push_back({11, "Lambert series and Euler product", [] {
        Outcome o;
        o.require(lambert_moebius_check(50), "Lambert series is not x to order 50");
        o.require(euler_product_inverse_zeta(47, 50) == named_series("moebius", 50),
                  "Euler product differs from the Moebius series");
        return o;
    }});

    cs.push_back({12, "multiplication-table spectra", [] {
        Outcome o;
        const auto A = gram_A(table_matrix_add(50));
        const auto M = gram_A(table_matrix_mul(50));
        for (std::size_t i = 0; i < A.size(); ++i)
            for (std::size_t j = 0; j < A.size(); ++j)
                o.require(A[i][j] == (i == j ? Integer(i + 1) : Integer(0)), "additive Gram entry");
        for (std::size_t i = 0; i < M.size(); ++i)
            for (std::size_t j = 0; j < M.size(); ++j) {
                unsigned d = 0;
                for (std::size_t k = 1; k <= i + 1; ++k) d += (i + 1) % k == 0;
                o.require(M[i][j] == (i == j ? Integer(d) : Integer(0)), "multiplicative Gram entry");
            }
        for (std::uint64_t n = 1; n <= 1000; ++n) {
            o.require(operator_identity_add(Nat(n)) == Integer(n * (n + 1)), "(+ o D+)(n) at " + std::to_string(n));
            o.require(operator_identity_mul(Nat(n)) == Integer(n * divisors_u64(n).size()),
                      "(. o D.)(n) at " + std::to_string(n));
        }
        for (std::uint64_t N = 1; N <= 12; ++N) {
            o.require(nonzero_spectra_agree(table_matrix_add(N)), "additive spectra at N=" + std::to_string(N));
            o.require(nonzero_spectra_agree(table_matrix_mul(N)), "multiplicative spectra at N=" + std::to_string(N));
        }
        return o;
    }});

    return cs;
}

// Runs every criterion, printing one PASS/FAIL line each. Returns true iff all pass.
inline bool run_all(std::ostream &os) {
    bool all = true;
    for (const auto &c : criteria()) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        all = all && o.pass;
        os << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title;
        if (!o.detail.empty()) os << " (" << o.detail << ")";
        os << '\n';
    }
    return all;
}

} // namespace dhopf::acceptance
