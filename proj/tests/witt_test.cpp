#include "dhopf/witt.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dhopf;

namespace {

MultiPoly var(char f, unsigned i) { return MultiPoly::var(f, i); }

WittVector random_witt(std::mt19937_64 &rng, std::size_t N) {
    std::uniform_int_distribution<int> dist(-9, 9);
    WittVector w(N);
    for (auto &x : w) x = dist(rng);
    return w;
}

WittVector ints(std::initializer_list<long> xs) {
    WittVector w;
    for (long x : xs) w.emplace_back(x);
    return w;
}

std::map<Var, Rational> assignment(const WittVector &w, const WittVector &v) {
    std::map<Var, Rational> at;
    for (std::size_t i = 0; i < w.size(); ++i) {
        at[Var{'w', static_cast<unsigned>(i + 1)}] = w[i];
        at[Var{'v', static_cast<unsigned>(i + 1)}] = v[i];
    }
    return at;
}

} // namespace

TEST(Ghost, Examples) {
    const auto r = ghost(witt_symbols('w', 4));
    EXPECT_EQ(r[0], var('w', 1));
    EXPECT_EQ(r[1], ring_pow(var('w', 1), 2) + MultiPoly(2) * var('w', 2));
    EXPECT_EQ(r[3], ring_pow(var('w', 1), 4) + MultiPoly(2) * ring_pow(var('w', 2), 2) + MultiPoly(4) * var('w', 4));
    EXPECT_EQ(ghost(ints({1, 0, 0, 0, 0, 0})), ints({1, 1, 1, 1, 1, 1}));
}

TEST(GhostInverse, Examples) {
    EXPECT_EQ(ghost_inverse(ints({1, 1, 1, 1, 1, 1, 1, 1})), ints({1, 0, 0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(ghost_inverse(ints({0, 0, 0, 0})), ints({0, 0, 0, 0}));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        const auto w = random_witt(rng, 8);
        EXPECT_EQ(ghost_inverse(ghost(w)), w);
        EXPECT_EQ(ghost(ghost_inverse(w)), w);
    }
}

TEST(WittArithmetic, Examples) {
    const auto w = witt_symbols('w', 3), v = witt_symbols('v', 3);
    EXPECT_EQ(witt_add(w, v)[1], var('w', 2) + var('v', 2) - var('w', 1) * var('v', 1));
    EXPECT_EQ(witt_mul(w, v)[0], var('w', 1) * var('v', 1));
    const auto u = ints({3, -1, 4, 1, -5, 9});
    EXPECT_EQ(witt_add(u, ints({0, 0, 0, 0, 0, 0})), u);
    EXPECT_THROW(witt_add(u, ints({1})), domain_error);
    EXPECT_THROW(witt_mul(u, ints({1})), domain_error);
}

TEST(WittArithmetic, GhostIsARingMapAndIntegral) {
    std::mt19937_64 rng(20240607);
    for (int t = 0; t < 500; ++t) {
        const std::size_t N = 1 + t % 8;
        const auto u = random_witt(rng, N), v = random_witt(rng, N);
        const auto s = witt_add(u, v), p = witt_mul(u, v);
        ASSERT_TRUE(all_integral(s) && all_integral(p));
        const auto gu = ghost(u), gv = ghost(v), gs = ghost(s), gp = ghost(p);
        for (std::size_t i = 0; i < N; ++i) {
            ASSERT_EQ(gs[i], gu[i] + gv[i]);
            ASSERT_EQ(gp[i], gu[i] * gv[i]);
        }
    }
}

TEST(UniversalPolys, Examples) {
    const auto up = universal_polys(6);
    EXPECT_EQ(up.F[0], var('w', 1) + var('v', 1));
    EXPECT_EQ(up.F[1], var('w', 2) + var('v', 2) - var('w', 1) * var('v', 1));
    for (const auto &x : up.F[5].variables()) EXPECT_EQ(6 % x.index, 0u) << x.str();
    EXPECT_THROW(universal_polys(0), domain_error);
    EXPECT_THROW(universal_polys(9), domain_error);
}

TEST(UniversalPolys, SpecializeToConcreteArithmetic) {
    const auto up = universal_polys(6);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        const auto u = random_witt(rng, 6), v = random_witt(rng, 6);
        const auto at = assignment(u, v);
        const auto s = witt_add(u, v), p = witt_mul(u, v);
        for (std::size_t i = 0; i < 6; ++i) {
            ASSERT_EQ(up.F[i].evaluate(at), s[i]);
            ASSERT_EQ(up.G[i].evaluate(at), p[i]);
        }
    }
}

TEST(Lambda, Operations) {
    EXPECT_EQ(lambda_op(2, 4), 6);
    const Integer x = 3, y = 5;
    for (unsigned n = 0; n <= 6; ++n) {
        Integer s = 0;
        for (unsigned r = 0; r <= n; ++r) s += lambda_op(r, x) * lambda_op(n - r, y);
        EXPECT_EQ(lambda_op(n, x + y), s);
    }
    const Integer a = 3, b = 4;
    EXPECT_EQ(lambda_op(2, a * b), a * a * lambda_op(2, b) + b * b * lambda_op(2, a) - 2 * lambda_op(2, a) * lambda_op(2, b));
    EXPECT_EQ(lambda_op(2, -3), 6);
}

TEST(Lambda, IteratedIdentity) {
    EXPECT_TRUE(lambda_iter_identity(4));
    EXPECT_TRUE(lambda_iter_identity(0));
    EXPECT_TRUE(lambda_iter_identity(7));
    EXPECT_EQ(lambda_op(2, lambda_op(2, 7)), 210);
    for (int x = -20; x <= 20; ++x) EXPECT_TRUE(lambda_iter_identity(x)) << x;
}

TEST(Adams, Subsampling) {
    const std::vector<int> s = {1, 2, 3, 4, 5, 6};
    EXPECT_EQ(adams_op(1, s), s);
    EXPECT_EQ(adams_op(2, s), (std::vector<int>{2, 4, 6}));
    std::vector<int> twelve(12);
    std::iota(twelve.begin(), twelve.end(), 1);
    EXPECT_EQ(adams_op(2, adams_op(3, twelve)), adams_op(6, twelve));
    const std::vector<int> constant(12, 7);
    for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(adams_op(n, constant), std::vector<int>(12 / n, 7));
    EXPECT_THROW(adams_op(0, s), domain_error);
}

TEST(ElementaryConversion, LowDegrees) {
    const auto e = witt_symbols('e', 5);
    const auto w = e_to_w(e, 5);
    const auto &e1 = e[0], &e2 = e[1], &e3 = e[2], &e4 = e[3], &e5 = e[4];
    EXPECT_EQ(w[0], e1);
    EXPECT_EQ(w[1], -e2);
    EXPECT_EQ(w[2], e3 - e1 * e2);
    EXPECT_EQ(w[3], -e4 + e1 * e3 - e1 * e1 * e2);
    EXPECT_EQ(w[4], e5 - e1 * e4 - e2 * e3 + e1 * e2 * e2 + e1 * e1 * e3 - e1 * e1 * e1 * e2);
}

TEST(ElementaryConversion, RoundTrip) {
    std::mt19937_64 rng(9);
    for (std::size_t N = 1; N <= 8; ++N)
        for (int t = 0; t < 20; ++t) {
            const auto x = random_witt(rng, N);
            EXPECT_EQ(w_to_e(e_to_w(x, N), N), x);
            EXPECT_EQ(e_to_w(w_to_e(x, N), N), x);
        }
    const auto e = witt_symbols('e', 6);
    EXPECT_EQ(w_to_e(e_to_w(e, 6), 6), e);
}

TEST(LogDerivative, Examples) {
    EXPECT_EQ(log_derivative_L(ints({1, 0, 0, 0})), ints({0, 0, 0}));
    EXPECT_EQ(log_derivative_L(ints({1, 1, 0, 0, 0})), ints({1, -1, 1, -1}));
    EXPECT_THROW(log_derivative_L(ints({2, 1})), domain_error);
}

TEST(LogDerivative, RecoversSignedGhostComponents) {
    const std::size_t N = 6;
    const auto w = witt_symbols('w', N);
    std::vector<MultiPoly> f{MultiPoly(1)};
    for (const auto &x : w_to_e(w, N)) f.push_back(x);
    const auto g = log_derivative_L(f);
    const auto r = ghost(w);
    for (std::size_t n = 1; n <= N; ++n) EXPECT_EQ(g[n - 1], n % 2 ? r[n - 1] : -r[n - 1]) << n;
}

TEST(LogDerivative, SymbolicElementaryInput) {
    const std::size_t N = 3;
    const auto e = witt_symbols('e', N);
    std::vector<MultiPoly> f{MultiPoly(1)};
    for (const auto &x : e) f.push_back(x);
    const auto g = log_derivative_L(f);
    const auto r = ghost(e_to_w(e, N));
    for (std::size_t n = 1; n <= N; ++n) EXPECT_EQ(g[n - 1], n % 2 ? r[n - 1] : -r[n - 1]);
}
