#include "nichols/errors.hpp"
#include "nichols/scalar.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace nichols;
using nichols::testing::random_scalar;

namespace {

using IntVec = std::vector<mpz_class>;

// Exact division of integer polynomials (ascending coefficients), divisor monic.
IntVec divide_exact(IntVec num, const IntVec& den)
{
    IntVec quo(num.size() - den.size() + 1);
    for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
        mpz_class c = num[k + den.size() - 1];
        quo[k] = c;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[k + j] -= c * den[j];
    }
    for (const auto& r : num)
        EXPECT_EQ(r, 0);
    return quo;
}

// Phi_M = (x^M - 1) / prod_{d | M, d < M} Phi_d.
IntVec cyclotomic_oracle(int m)
{
    IntVec p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0)
            p = divide_exact(p, cyclotomic_oracle(d));
    return p;
}

} // namespace

TEST(Cyclotomic, PolynomialMatchesDivisionOracle)
{
    for (int m = 1; m <= 30; ++m)
        EXPECT_EQ(cyclotomic_polynomial(m), cyclotomic_oracle(m)) << "M = " << m;
}

TEST(Cyclotomic, EulerPhi)
{
    for (int m = 1; m <= 40; ++m) {
        int count = 0;
        for (int k = 1; k <= m; ++k)
            count += std::gcd(k, m) == 1;
        EXPECT_EQ(euler_phi(m), count);
    }
}

TEST(Cyclotomic, ZetaIsARootOfPhi)
{
    for (int m = 1; m <= 24; ++m) {
        Cyclotomic sum(m);
        const auto& phi = cyclotomic_polynomial(m);
        for (std::size_t k = 0; k < phi.size(); ++k)
            sum += Cyclotomic::rational(m, mpq_class(phi[k])) * Cyclotomic::zeta_power(m, static_cast<long>(k));
        EXPECT_TRUE(sum.is_zero()) << "M = " << m;
    }
}

TEST(Cyclotomic, OrdersOfPowers)
{
    for (int m : {2, 3, 4, 5, 6, 8, 9, 12, 15}) {
        EXPECT_TRUE(Cyclotomic::zeta_power(m, m).is_one());
        for (int k = 1; k < m; ++k) {
            Cyclotomic z = Cyclotomic::zeta_power(m, k);
            EXPECT_FALSE(z.is_one());
            ASSERT_TRUE(z.root_of_unity_order());
            EXPECT_EQ(*z.root_of_unity_order(), m / std::gcd(k, m));
        }
    }
    // -1 has order 2 in any field
    EXPECT_EQ(Cyclotomic::rational(5, -1).root_of_unity_order(), 2);
    EXPECT_FALSE(Cyclotomic::rational(5, 2).root_of_unity_order());
}

TEST(Cyclotomic, Norm)
{
    EXPECT_EQ(Cyclotomic::zeta_power(3, 1).norm(), 1);
    EXPECT_EQ(Cyclotomic::rational(3, 2).norm(), 4);
    EXPECT_EQ(Cyclotomic::rational(5, 2).norm(), 16);
    // N(1 - zeta_p) = p for p prime
    for (int p : {3, 5, 7})
        EXPECT_EQ((Cyclotomic::rational(p, 1) - Cyclotomic::zeta_power(p, 1)).norm(), p);
}

class FieldAxioms : public ::testing::TestWithParam<int> {};

TEST_P(FieldAxioms, HoldOnRandomElements)
{
    const int m = GetParam();
    std::mt19937 rng(1000 + m);
    for (int trial = 0; trial < 40; ++trial) {
        Scalar a = random_scalar(rng, m), b = random_scalar(rng, m), c = random_scalar(rng, m);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Scalar::zero(m));
        if (!a.is_zero()) {
            EXPECT_TRUE((a * a.inverse()).is_one());
            EXPECT_EQ(b / a * a, b);
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Orders, FieldAxioms, ::testing::Values(1, 2, 3, 4, 5, 6, 12));

TEST(Scalar, CanonicalFormIsStructural)
{
    Scalar t = Scalar::transcendental(1);
    Scalar one = Scalar::one(1);
    EXPECT_EQ((t * t - one) / (t - one), t + one);
    EXPECT_EQ((Scalar::from_int(1, 2) * t) / (Scalar::from_int(1, 4) * t * t), Scalar::rational(1, mpq_class(1, 2)) / t);
    EXPECT_EQ((t / t).to_string(), "1");
}

TEST(Scalar, PowersAndHeight)
{
    Scalar t = Scalar::transcendental(3);
    Scalar z = Scalar::zeta(3);
    EXPECT_TRUE(z.pow(3).is_one());
    EXPECT_EQ(z.pow(-1), z.pow(2));
    EXPECT_EQ((z * t).pow(3), t.pow(3));
    EXPECT_EQ(t.pow(-2).height(), 2);
    EXPECT_EQ((t + Scalar::one(3)).pow(3).height(), 3);
}

TEST(Scalar, RootOfUnityOrder)
{
    EXPECT_EQ(Scalar::zeta(6, 2).root_of_unity_order(), 3);
    EXPECT_EQ(Scalar::from_int(4, -1).root_of_unity_order(), 2);
    EXPECT_FALSE(Scalar::transcendental(4).root_of_unity_order());
    EXPECT_FALSE(Scalar::from_int(1, 3).root_of_unity_order());
}

TEST(Scalar, ErrorsOnZeroAndMismatchedFields)
{
    EXPECT_THROW(Scalar::zero(3).inverse(), InvalidOperand);
    EXPECT_THROW(Scalar::one(3) / Scalar::zero(3), InvalidOperand);
    EXPECT_THROW(Scalar::zeta(3) + Scalar::zeta(4), InvalidOperand);
    // rationals lift into any cyclotomic field
    EXPECT_EQ(Scalar::one(1) + Scalar::zeta(5), Scalar::one(5) + Scalar::zeta(5));
}

TEST(Scalar, DiscreteLog)
{
    Scalar t = Scalar::transcendental(1);
    EXPECT_EQ(discrete_log(t, t.pow(5)), 5);
    EXPECT_EQ(discrete_log(t.pow(2), t.pow(5)), std::nullopt);
    EXPECT_EQ(discrete_log(Scalar::zeta(6), Scalar::zeta(6, 4)), 4);
    EXPECT_EQ(discrete_log(Scalar::from_int(1, 2), Scalar::from_int(1, 8)), 3);
    EXPECT_EQ(discrete_log(Scalar::from_int(1, 2), Scalar::from_int(1, 3)), std::nullopt);
    EXPECT_THROW(discrete_log(Scalar::zero(1), t), InvalidOperand);
}

TEST(Scalar, Printing)
{
    Scalar t = Scalar::transcendental(3);
    EXPECT_EQ(t.inverse().to_string(), "1/(t)");
    EXPECT_EQ(Scalar::zeta(3).to_string(), "z");
    EXPECT_EQ(Scalar::zeta(3, 2).to_string(), "-1 - z");
    EXPECT_EQ((Scalar::zeta(3, 2) / t).to_string(), "(-1 - z)/(t)");
    EXPECT_EQ(t.to_string("q"), "q");
}
