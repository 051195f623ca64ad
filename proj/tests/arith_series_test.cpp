#include "dhopf/arith_series.hpp"
#include "dhopf/dirichlet.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace dhopf;

namespace {

DirichletSeries from(std::initializer_list<long> xs) {
    std::vector<Rational> c;
    for (long x : xs) c.emplace_back(x);
    return DirichletSeries(c);
}

// Ordered factorizations of n into factors > 1, by direct enumeration.
unsigned long ordered_factorizations_brute(unsigned n) {
    if (n == 1) return 1;
    unsigned long s = 0;
    for (unsigned d = 2; d <= n; ++d)
        if (n % d == 0) s += ordered_factorizations_brute(n / d);
    return s;
}

DirichletSeries random_series(std::mt19937_64 &rng, std::size_t N, bool unit_lead) {
    std::uniform_int_distribution<int> dist(-5, 5);
    DirichletSeries s(N);
    for (std::size_t n = 1; n <= N; ++n) s[n] = dist(rng);
    if (unit_lead) s[1] = 1 + std::abs(dist(rng));
    return s;
}

bool multiplicative_on_coprimes(const DirichletSeries &s, std::size_t N) {
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t m = 1; n * m <= N; ++m)
            if (std::gcd(n, m) == 1 && s[n * m] != s[n] * s[m]) return false;
    return true;
}

} // namespace

TEST(NamedSeries, Examples) {
    EXPECT_EQ(named_series("zeta_squared", 8), from({1, 2, 2, 3, 2, 4, 2, 4}));
    EXPECT_EQ(named_series("lambda", 8), from({1, 0, 1, 0, 1, 0, 1, 0}));
    EXPECT_EQ(named_series("moebius", 10), from({1, -1, -1, 0, -1, 1, -1, 0, 0, 1}));
    EXPECT_EQ(named_series("identity_shift", 6), from({1, -2, -3, 0, -5, 6}));
    EXPECT_THROW(named_series("nope", 5), domain_error);
    EXPECT_THROW(named_series("zeta", 0), domain_error);
}

TEST(NamedSeries, OrderedFactorizationsMatchEnumeration) {
    EXPECT_EQ(named_series("ordered_factorizations", 12), from({1, 1, 1, 2, 1, 3, 1, 4, 2, 3, 1, 8}));
    const auto h = named_series("ordered_factorizations", 300);
    for (unsigned n = 1; n <= 300; ++n) ASSERT_EQ(h[n], Rational(ordered_factorizations_brute(n))) << n;
}

TEST(SeriesRing, Examples) {
    const auto mu = named_series("moebius", 100), zeta = named_series("zeta", 100);
    EXPECT_EQ(series_mul(mu, zeta), DirichletSeries::unit(100));
    EXPECT_EQ(hadamard(named_series("identity", 100), mu), named_series("identity_shift", 100));
    EXPECT_EQ(series_add(mu, DirichletSeries(100)), mu);
    EXPECT_EQ(series_inverse(zeta), mu);
    EXPECT_THROW(series_inverse(DirichletSeries(5)), domain_error);
}

TEST(SeriesRing, MultiplicationLaws) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        const auto f = random_series(rng, 200, false), g = random_series(rng, 200, false),
                   h = random_series(rng, 200, false);
        EXPECT_EQ(series_mul(f, g), series_mul(g, f));
        EXPECT_EQ(series_mul(series_mul(f, g), h), series_mul(f, series_mul(g, h)));
        EXPECT_EQ(series_mul(f, DirichletSeries::unit(200)), f);
        EXPECT_EQ(series_mul(f, series_add(g, h)), series_add(series_mul(f, g), series_mul(f, h)));
    }
}

TEST(SeriesRing, InverseIsInvolutive) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        const auto f = random_series(rng, 100, true);
        EXPECT_EQ(series_inverse(series_inverse(f)), f);
        EXPECT_EQ(series_mul(f, series_inverse(f)), DirichletSeries::unit(100));
    }
}

TEST(SeriesRing, ProductKeepsMultiplicativity) {
    const auto a = named_series("moebius", 100), b = named_series("zeta_squared", 100);
    const auto c = hadamard(named_series("identity", 100), named_series("lambda", 100));
    ASSERT_TRUE(multiplicative_on_coprimes(a, 100) && multiplicative_on_coprimes(b, 100) &&
                multiplicative_on_coprimes(c, 100));
    EXPECT_TRUE(multiplicative_on_coprimes(series_mul(a, b), 100));
    EXPECT_TRUE(multiplicative_on_coprimes(series_mul(b, c), 100));
    EXPECT_FALSE(multiplicative_on_coprimes(named_series("ordered_factorizations", 100), 100));
}

TEST(SeriesRing, IdentityShiftIsTheAntipode) {
    const auto s = named_series("identity_shift", 500);
    const auto table = antipode_mul_table(500);
    for (unsigned n = 1; n <= 500; ++n) ASSERT_EQ(s[n], table[n]);
    EXPECT_EQ(series_mul(s, named_series("identity", 500)), DirichletSeries::unit(500));
}

TEST(EulerProduct, Examples) {
    const auto mu = named_series("moebius", 13);
    const auto e = euler_product_inverse_zeta(7, 10);
    for (unsigned n = 1; n <= 10; ++n) EXPECT_EQ(e[n], mu[n]);
    EXPECT_EQ(euler_product_inverse_zeta(2, 2), from({1, -1}));
    EXPECT_EQ(euler_product_inverse_zeta(13, 13), mu);
    EXPECT_THROW(euler_product_inverse_zeta(5, 10), domain_error);
    EXPECT_EQ(euler_product_inverse_zeta(1000, 400), named_series("moebius", 400));
}

TEST(LSeries, Examples) {
    const auto z = l_series({1}, 30);
    EXPECT_EQ(z.series, named_series("zeta", 30));
    EXPECT_TRUE(z.completely_multiplicative);
    const auto odd = l_series({1, 0}, 30);
    EXPECT_EQ(odd.series, named_series("lambda", 30));
    EXPECT_TRUE(odd.completely_multiplicative);
    const DirichletSeries two_s = [] {
        DirichletSeries t = DirichletSeries::unit(30);
        t[2] = -1;
        return t;
    }();
    EXPECT_EQ(series_mul(two_s, named_series("zeta", 30)), odd.series);
    const auto alt = l_series({1, -1}, 30);
    for (unsigned n = 1; n <= 30; ++n) EXPECT_EQ(alt.series[n], n % 2 ? 1 : -1);
    EXPECT_FALSE(alt.completely_multiplicative);
    EXPECT_TRUE(l_series({1, -1, 0}, 60).completely_multiplicative);
    EXPECT_THROW(l_series({}, 5), domain_error);
}

TEST(Hurwitz, Examples) {
    const auto k0 = hurwitz_coeffs(0, 5);
    EXPECT_EQ(k0, std::vector<Rational>(5, Rational(1)));
    EXPECT_EQ(hurwitz_coeffs(1, 3), (std::vector<Rational>{0, 1, 1, 1}));
    EXPECT_EQ(hurwitz_coeffs(2, 2), (std::vector<Rational>{0, 0, 1, 1}));
}

TEST(Lambert, Examples) {
    EXPECT_TRUE(lambert_moebius_check(1));
    EXPECT_TRUE(lambert_moebius_check(20));
    EXPECT_TRUE(lambert_moebius_check(50));
    EXPECT_EQ(lambert_moebius(6), PowerSeries({0, 1, 0, 0, 0, 0, 0}));
}

TEST(Polylog, Examples) {
    const auto t = polylog_coeffs(8, 10);
    for (unsigned n = 1; n <= 8; ++n)
        for (unsigned m = 0; m <= 10; ++m) EXPECT_EQ(t(n, m), n == m ? 1 : 0);
    const auto o = OdgTable::outer(named_series("zeta", 6), PowerSeries(std::vector<Rational>(5, Rational(1))));
    EXPECT_EQ(o.n_max(), 6u);
    EXPECT_EQ(o.m_max(), 4u);
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned m = 0; m <= 4; ++m) EXPECT_EQ(o(n, m), 1);
}

TEST(Csv, RationalCoefficients) {
    std::ostringstream os;
    write_csv(os, series_inverse(series_scale(named_series("zeta", 3), 2)));
    EXPECT_EQ(os.str(), "n,coefficient\n1,1/2\n2,-1/2\n3,-1/2\n");
}
