#include <cmath>
#include <thread>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace bepoly {
namespace {

// Akiyama-Tanigawa; yields B_1 = +1/2, flipped to the B_n(0) convention.
Rational bernoulli_oracle(long n) {
    std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
    for (long m = 0; m <= n; ++m) {
        a[static_cast<std::size_t>(m)] = Rational(1, m + 1);
        for (long j = m; j >= 1; --j)
            a[static_cast<std::size_t>(j - 1)] =
                Rational(j) * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
    }
    return n == 1 ? -a[0] : a[0];
}

// E_{2n} = -sum_{k<n} C(2n,2k) E_{2k}; odd-index values vanish.
BigInt euler_oracle(long n) {
    if (n % 2 == 1) return 0;
    std::vector<BigInt> e{1};
    for (long m = 1; 2 * m <= n; ++m) {
        BigInt s = 0;
        for (long k = 0; k < m; ++k) s += binomial(2 * m, 2 * k) * e[static_cast<std::size_t>(k)];
        e.push_back(-s);
    }
    return e.back();
}

Polynomial poly(std::initializer_list<Rational> ascending) {
    std::vector<Gauss> c;
    for (const auto& r : ascending) c.emplace_back(r);
    return Polynomial(std::move(c));
}

TEST(BernoulliPoly, ListedPolynomials) {
    EXPECT_EQ(bernoulli_poly(0), Polynomial(1));
    EXPECT_EQ(bernoulli_poly(1), poly({Rational(-1, 2), 1}));
    EXPECT_EQ(bernoulli_poly(2), poly({Rational(1, 6), -1, 1}));
    EXPECT_EQ(bernoulli_poly(3), poly({0, Rational(1, 2), Rational(-3, 2), 1}));
    EXPECT_EQ(bernoulli_poly(6).coeff(0), Gauss(Rational(1, 42)));
    EXPECT_EQ(bernoulli_poly_oracle(6).coeff(0), Gauss(Rational(1, 42)));
}

TEST(BernoulliPoly, Oracle) {
    EXPECT_EQ(bernoulli_poly_oracle(1), poly({Rational(-1, 2), 1}));
    EXPECT_EQ(bernoulli_poly_oracle(0), Polynomial(1));
    EXPECT_EQ(bernoulli_poly_oracle(4).eval(Gauss(0)), Gauss(Rational(-1, 30)));
}

TEST(BernoulliNumber, Values) {
    EXPECT_EQ(bernoulli_number(2), Rational(1, 6));
    EXPECT_EQ(bernoulli_number(7), Rational(0));
    EXPECT_EQ(bernoulli_number(12), Rational(-691, 2730));
    EXPECT_EQ(bernoulli_oracle(12), Rational(-691, 2730));
    EXPECT_THROW(bernoulli_number(-1), DomainError);
}

TEST(EulerPoly, ListedPolynomials) {
    EXPECT_EQ(euler_poly(0), Polynomial(1));
    EXPECT_EQ(euler_poly(1), poly({Rational(-1, 2), 1}));
    EXPECT_EQ(euler_poly(2), poly({0, -1, 1}));
    EXPECT_EQ(euler_poly(3), poly({Rational(1, 4), 0, Rational(-3, 2), 1}));
}

TEST(EulerPoly, Oracle) {
    EXPECT_EQ(euler_poly_oracle(1), poly({Rational(-1, 2), 1}));
    EXPECT_EQ(euler_poly_oracle(0), Polynomial(1));
    EXPECT_EQ(euler_poly_oracle(2), poly({0, -1, 1}));
}

TEST(EulerNumber, Values) {
    EXPECT_EQ(euler_number(4), 5);
    EXPECT_EQ(euler_number(3), 0);
    EXPECT_EQ(euler_number(6), -61);
    EXPECT_EQ(euler_oracle(6), -61);
}

TEST(EulerNumber, ViaQuarterPoint) {
    EXPECT_EQ(euler_number_via_quarter(1), Rational(-1));
    EXPECT_EQ(euler_number_via_quarter(2), Rational(5));
    EXPECT_EQ(euler_number_via_quarter(3), Rational(-61));
    EXPECT_THROW(euler_number_via_quarter(0), DomainError);
}

TEST(Zeta, PartialSumError) {
    // n = 1: the error is the tail sum_{k>N} k^-2 = 1/N - 1/(2N^2) + 1/(6N^3) - ... over zeta(2)
    const double N = 1e4;
    const double tail = 1 / N - 1 / (2 * N * N) + 1 / (6 * N * N * N);
    const double expected = tail / (std::numbers::pi * std::numbers::pi / 6);
    const auto r1 = zeta_sanity(1, 10000);
    EXPECT_NEAR(r1.relative_error, expected, 1e-12);
    EXPECT_GT(r1.relative_error, 1e-6);

    EXPECT_LT(zeta_sanity(4, 1000).relative_error, 1e-9);

    const auto degenerate = zeta_sanity(1, 1);
    EXPECT_TRUE(std::isfinite(degenerate.relative_error));
    EXPECT_NEAR(degenerate.relative_error, std::abs(1 - 6 / (std::numbers::pi * std::numbers::pi)), 1e-12);
}

TEST(SpecialPolyProperties, TwoConstructionPathsAgree) {
    for (long n = 0; n <= 24; ++n) {
        EXPECT_EQ(bernoulli_poly(n), bernoulli_poly_oracle(n)) << n;
        EXPECT_EQ(euler_poly(n), euler_poly_oracle(n)) << n;
    }
}

TEST(SpecialPolyProperties, NumbersMatchPolynomialsAndOracles) {
    for (long n = 0; n <= 24; ++n) {
        EXPECT_EQ(bernoulli_poly(n).eval(Gauss(0)), Gauss(bernoulli_number(n))) << n;
        EXPECT_EQ(bernoulli_number(n), bernoulli_oracle(n)) << n;
        EXPECT_EQ(euler_poly(n).eval(Gauss(Rational(1, 2))) * Gauss(Rational(ipow(2, n))),
                  Gauss(Rational(euler_number(n))))
            << n;
        EXPECT_EQ(euler_number(n), euler_oracle(n)) << n;
    }
}

TEST(SpecialPolyProperties, EulerAsBernoulliDifference) {
    // (n/2) E_{n-1}(z) = B_n(z) - 2^n B_n(z/2)
    for (long n = 1; n <= 24; ++n) {
        const Polynomial lhs = euler_poly(n - 1) * Gauss(Rational(n, 2));
        const Polynomial rhs = bernoulli_poly(n) -
                               bernoulli_poly(n).affine_compose(Gauss(Rational(1, 2)), Gauss(0)) * Gauss(Rational(ipow(2, n)));
        EXPECT_EQ(lhs, rhs) << n;
    }
}

TEST(SpecialPolyProperties, AdditionFormulaAtSampledShifts) {
    const std::vector<Rational> ys = {0, 1, -1, Rational(1, 2), 2, Rational(-1, 2), -2, Rational(1, 3), 3,
                                      Rational(-1, 3), -3, Rational(1, 4), 4, Rational(-1, 4), -4, Rational(1, 5), 5};
    for (Family f : {Family::bernoulli, Family::euler}) {
        for (long n = 0; n <= 16; ++n) {
            for (long s = 0; s <= n; ++s) {
                const Gauss y(ys[static_cast<std::size_t>(s)]);
                Polynomial rhs;
                for (long k = 0; k <= n; ++k)
                    rhs += family_poly(f, k) * (Gauss(Rational(binomial(n, k))) * pow(y, n - k));
                EXPECT_EQ(family_poly(f, n).affine_compose(Gauss(1), y), rhs) << n << " y=" << y;
            }
        }
    }
}

TEST(SpecialPolyProperties, MultiplicationFormula) {
    for (long m = 2; m <= 4; ++m) {
        for (long n = 0; n <= 16; ++n) {
            Polynomial sum;
            for (long k = 0; k < m; ++k) sum += bernoulli_poly(n).affine_compose(Gauss(1), Gauss(Rational(k, m)));
            const Polynomial rhs = sum * pow(Gauss(m), n - 1);
            EXPECT_EQ(bernoulli_poly(n).affine_compose(Gauss(m), Gauss(0)), rhs) << "m=" << m << " n=" << n;
        }
    }
}

TEST(SpecialPolyProperties, OddIndexNumbersVanish) {
    for (long k = 1; 2 * k + 1 <= 40; ++k) EXPECT_TRUE(bernoulli_number(2 * k + 1).is_zero());
    for (long k = 0; 2 * k + 1 <= 40; ++k) EXPECT_EQ(euler_number(2 * k + 1), 0);
}

TEST(NumberCache, TransparentAfterUse) {
    (void)bernoulli_number(30);
    (void)euler_number(20);
    for (const auto& [n, v] : numbers().bernoulli_snapshot()) EXPECT_EQ(v, bernoulli_oracle(n)) << n;
    for (const auto& [n, v] : numbers().euler_snapshot()) EXPECT_EQ(v, euler_oracle(n)) << n;
}

TEST(NumberCache, ConcurrentCallsAgree) {
    const NumberCache local;
    std::vector<Rational> b(8);
    std::vector<BigInt> e(8);
    {
        std::vector<std::jthread> threads;
        for (std::size_t t = 0; t < 8; ++t)
            threads.emplace_back([&, t] {
                b[t] = local.bernoulli(40);
                e[t] = local.euler(30);
            });
    }
    for (std::size_t t = 0; t < 8; ++t) {
        EXPECT_EQ(b[t], bernoulli_oracle(40));
        EXPECT_EQ(e[t], euler_oracle(30));
    }
}

}  // namespace
}  // namespace bepoly
