#include "dhopf/normal_order.hpp"

#include <gtest/gtest.h>

using namespace dhopf;

namespace {

NormalMonomial M(unsigned dag, unsigned low) { return {dag, low}; }

OperatorSum ops(std::initializer_list<std::pair<long, NormalMonomial>> terms) {
    OperatorSum s;
    for (const auto &[c, m] : terms) s.add(m, c);
    return s;
}

} // namespace

TEST(PairingF, Generators) {
    EXPECT_EQ(pairing_F(M(0, 1), M(1, 0)), 1);
    EXPECT_EQ(pairing_F(M(0, 1), M(0, 1)), 0);
    EXPECT_EQ(pairing_F(M(1, 0), M(0, 1)), 0);
    EXPECT_EQ(pairing_F(M(1, 0), M(1, 0)), 0);
    EXPECT_EQ(pairing_F(M(0, 0), M(0, 0)), 1);
    EXPECT_EQ(pairing_F(M(0, 2), M(2, 0)), 2);
}

TEST(PairingF, ClosedForm) {
    for (unsigned a = 0; a <= 5; ++a)
        for (unsigned b = 0; b <= 5; ++b)
            for (unsigned c = 0; c <= 5; ++c)
                for (unsigned d = 0; d <= 5; ++d) {
                    const bool live = a == 0 && d == 0 && b == c;
                    ASSERT_EQ(pairing_F(M(a, b), M(c, d)), live ? Rational(factorial(b)) : Rational(0))
                        << a << b << c << d;
                }
}

TEST(CircleOp, Examples) {
    EXPECT_EQ(circle_op(M(0, 1), M(1, 0)), ops({{1, M(1, 1)}, {1, M(0, 0)}}));
    EXPECT_EQ(circle_op(M(1, 1), M(1, 1)), ops({{1, M(2, 2)}, {1, M(1, 1)}}));
    EXPECT_EQ(circle_op(M(1, 1), M(2, 2)), ops({{1, M(3, 3)}, {2, M(2, 2)}}));
    EXPECT_EQ(circle_op(M(1, 0), M(0, 1)), ops({{1, M(1, 1)}}));
    EXPECT_EQ(render(circle_op(M(0, 1), M(1, 0))), ":a† a: + 1");
}

TEST(CircleOp, AnnihilatorsAgainstCreators) {
    for (unsigned n = 0; n <= 10; ++n) {
        OperatorSum one = ops({{1, M(n, 1)}});
        if (n) one.add(M(n - 1, 0), n);
        EXPECT_EQ(circle_op(M(0, 1), M(n, 0)), one);
        OperatorSum two = ops({{1, M(n, 2)}});
        if (n >= 1) two.add(M(n - 1, 1), 2 * n);
        if (n >= 2) two.add(M(n - 2, 0), Rational(2 * binomial(n, 2)));
        EXPECT_EQ(circle_op(M(0, 2), M(n, 0)), two);
    }
}

TEST(CircleOp, MatchesClosedContraction) {
    for (unsigned r = 0; r <= 4; ++r)
        for (unsigned s = 0; s <= 4; ++s)
            for (unsigned m = 0; m <= 4; ++m)
                for (unsigned n = 0; n <= 4; ++n) {
                    const OperatorSum c = circle_op(M(r, s), M(m, n));
                    ASSERT_EQ(c, circle_op_closed(M(r, s), M(m, n)));
                    for (const auto &[t, coeff] : c) {
                        const unsigned g = r + s + m + n;
                        ASSERT_LE(t.grade(), g);
                        ASSERT_EQ((g - t.grade()) % 2, 0u);
                    }
                }
}

TEST(CircleOp, BalancedAlgebraLaws) {
    for (unsigned i = 0; 2 * i <= 12; ++i)
        for (unsigned j = 0; 2 * (i + j) <= 12; ++j) {
            const OperatorSum x(M(i, i)), y(M(j, j));
            ASSERT_EQ(circle_op(x, y), circle_op(y, x));
            for (unsigned k = 0; 2 * (i + j + k) <= 12; ++k) {
                const OperatorSum z(M(k, k));
                ASSERT_EQ(circle_op(circle_op(x, y), z), circle_op(x, circle_op(y, z)));
            }
        }
}

TEST(CircleOp, NotCommutativeOffBalance) {
    EXPECT_NE(circle_op(M(0, 1), M(1, 0)), circle_op(M(1, 0), M(0, 1)));
}

TEST(Annihilation, Examples) {
    const auto a3 = derive_annihilate(3);
    EXPECT_EQ(a3.coefficient, Nat(3));
    EXPECT_EQ(a3.power, 2u);
    EXPECT_EQ(derive_annihilate(1).power, 0u);
    EXPECT_EQ(derive_annihilate(0).coefficient, Nat(0));
    EXPECT_FALSE(derive_annihilate(0).power.has_value());
    for (unsigned n : {0u, 5u, 100u}) EXPECT_TRUE(ccr_check(n));
}

TEST(InnerProduct, Orthonormal) {
    EXPECT_EQ(inner_product(3, 3), 1);
    EXPECT_EQ(inner_product(2, 3), 0);
    EXPECT_EQ(inner_product(0, 0), 1);
    for (unsigned n = 0; n <= 10; ++n)
        for (unsigned m = 0; m <= 10; ++m) EXPECT_EQ(inner_product(n, m), n == m ? 1 : 0);
}

TEST(Stirling, Examples) {
    EXPECT_EQ(stirling2(3, 2), 3);
    for (unsigned n = 0; n <= 10; ++n) EXPECT_EQ(stirling2(n, n), 1);
    EXPECT_EQ(circle_power(number_operator(), 3), ops({{1, M(3, 3)}, {3, M(2, 2)}, {1, M(1, 1)}}));
    EXPECT_EQ(stirling2(10, 4), 34105);
}

TEST(Stirling, ThreeWaysAgree) {
    const auto rec = stirling2_recurrence(12);
    for (unsigned n = 1; n <= 12; ++n) {
        const auto circ = stirling2_from_circle(n);
        for (unsigned k = 0; k <= n; ++k) {
            ASSERT_EQ(stirling2(n, k), rec[n][k]) << n << "," << k;
            ASSERT_EQ(circ[k], rec[n][k]) << n << "," << k;
        }
    }
}

TEST(RotaBaxter, Examples) {
    const OperatorSum one(M(0, 0));
    EXPECT_EQ(rota_baxter_R(one), ops({{1, M(1, 1)}}));
    OperatorSum half;
    half.add(M(2, 2), Rational(1, 2));
    EXPECT_EQ(rota_baxter_R(rota_baxter_R(one)), half);
    const OperatorSum cube = circle_power(rota_baxter_R(one), 3);
    EXPECT_EQ(cube, rota_baxter_power(3) * 6 + rota_baxter_power(2) * 6 + rota_baxter_power(1));
    EXPECT_THROW(rota_baxter_R(OperatorSum(M(1, 0))), domain_error);
}

TEST(RotaBaxter, PowersNormalizeToMonomials) {
    for (unsigned k = 0; k <= 10; ++k) {
        OperatorSum expect;
        expect.add(M(k, k), Rational(1) / Rational(factorial(k)));
        EXPECT_EQ(rota_baxter_power(k), expect);
    }
}

TEST(RotaBaxter, WeightOneIdentity) {
    const auto rep = rota_baxter_diagnostic(8);
    EXPECT_TRUE(rep.standard_weight_one);
    EXPECT_FALSE(rep.r_inside_variant);
}

TEST(RotaBaxter, MainTheorem) {
    for (unsigned n = 1; n <= 8; ++n) EXPECT_TRUE(main_theorem_check(n)) << n;
}
