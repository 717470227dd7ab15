#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <lagrange/gessel.hpp>
#include <lagrange/random.hpp>
#include <lagrange/symmetric.hpp>

#include "oracles.hpp"

using namespace lagrange;

namespace
{

void expect_series(const Series &s, const std::vector<Rational> &want, int from = 0)
{
    ASSERT_GE(s.precision(), from + static_cast<int>(want.size()));
    for (std::size_t i = 0; i < want.size(); ++i) {
        EXPECT_EQ(s.coeff(from + static_cast<int>(i)), want[i]) << "q^" << from + static_cast<int>(i);
    }
}

void expect_equal_to(const Series &a, const Series &b, int k)
{
    ASSERT_GE(a.precision(), k);
    ASSERT_GE(b.precision(), k);
    for (int i = std::min(a.valuation(), b.valuation()); i < k; ++i) {
        EXPECT_EQ(a.coeff(i), b.coeff(i)) << "q^" << i;
    }
}

} // namespace

TEST(PowerSum, Examples)
{
    const PuiseuxBranchSet sqrt_q = solve_ramified_branch(RSpec({1}), 2, 12);
    const Series p1 = power_sum(sqrt_q, 1);
    EXPECT_TRUE(p1.is_zero());
    EXPECT_GE(p1.precision(), 6);
    expect_series(power_sum(sqrt_q, 2), {0, 2, 0, 0, 0});

    const RSpec r({1, -1, 2});
    const PSeries h = solve_unramified(r, 8);
    const PuiseuxBranchSet single = solve_ramified_branch(r, 1, 9);
    for (int m = 1; m <= 4; ++m) {
        const Series hm = pow_int(Series(h), m);
        expect_equal_to(power_sum(single, m), hm, 9);
    }

    // H^2 = q(1+H): the branches are the roots of y^2 - q y - q.
    const PuiseuxBranchSet b = solve_ramified_branch(RSpec({1, 1}), 2, 16);
    expect_series(power_sum(b, 1), {0, 1, 0, 0, 0, 0});
}

TEST(PowerSum, OnlyIntegerPowersAndValuationBound)
{
    RandomR gen(5);
    for (int e = 1; e <= 3; ++e) {
        const PuiseuxBranchSet b = solve_ramified_branch(gen.next(2, 5, 3), e, 24);
        for (int m = 1; m <= 6; ++m) {
            const Series p = power_sum(b, m);
            EXPECT_GE(p.valuation(), (m + e - 1) / e);
        }
    }
}

TEST(PowerSum, PrecisionExceeded)
{
    const PuiseuxBranchSet b = solve_ramified_branch(RSpec({1, 1}), 2, 8);
    EXPECT_THROW(power_sum(b, 1, 20), precision_exceeded);
    EXPECT_NO_THROW(power_sum(b, 1, 4));
}

TEST(ElementarySymmetric, Examples)
{
    const auto sqrt_q = elementary_symmetric(solve_ramified_branch(RSpec({1}), 2, 10));
    ASSERT_EQ(sqrt_q.size(), 2U);
    EXPECT_TRUE(sqrt_q[0].is_zero());
    expect_series(sqrt_q[1], {0, -1, 0, 0});

    const RSpec r({1, 3, -1});
    const auto single = elementary_symmetric(solve_ramified_branch(r, 1, 9));
    ASSERT_EQ(single.size(), 1U);
    expect_equal_to(single[0], Series(solve_unramified(r, 8)), 9);

    const auto quad = elementary_symmetric(solve_ramified_branch(RSpec({1, 1}), 2, 16));
    expect_series(quad[0], {0, 1, 0, 0, 0});
    expect_series(quad[1], {0, -1, 0, 0, 0});
}

TEST(ElementarySymmetric, NewtonIdentitiesReproducePowerSums)
{
    RandomR gen(21);
    for (int e = 1; e <= 3; ++e) {
        for (int trial = 0; trial < 4; ++trial) {
            const PuiseuxBranchSet b = solve_ramified_branch(gen.next(1, 5, 3), e, e * 12);
            const PowerSumTable sums(b, 2 * e);
            const auto el = elementary_symmetric(sums);
            // p_m = sum_{i=1}^{min(m-1,e)} (-1)^(i-1) e_i p_{m-i} + [m <= e] (-1)^(m-1) m e_m
            std::vector<Series> p{sums[0]};
            for (int m = 1; m <= 2 * e; ++m) {
                Series acc = Series::zero(sums[0].precision());
                for (int i = 1; i <= std::min(m - 1, e); ++i) {
                    const Series term = el[static_cast<std::size_t>(i - 1)] * p[static_cast<std::size_t>(m - i)];
                    acc = (i % 2 == 1) ? acc + term : acc - term;
                }
                if (m <= e) {
                    const Series term = Rational(m) * el[static_cast<std::size_t>(m - 1)];
                    acc = (m % 2 == 1) ? acc + term : acc - term;
                }
                p.push_back(acc);
                expect_equal_to(acc, sums[m], std::min(acc.precision(), sums[m].precision()));
            }
        }
    }
}

TEST(Vandermonde, Examples)
{
    const Series one = vandermonde_product(solve_ramified_branch(RSpec({1, 5}), 1, 8));
    expect_series(one, {1, 0, 0, 0});

    expect_series(vandermonde_product(solve_ramified_branch(RSpec({1}), 2, 12)), {0, -4, 0, 0, 0});

    // -(H1 - H2)^2 = -((H1 + H2)^2 - 4 H1 H2) = -(q^2 + 4q)
    expect_series(vandermonde_product(solve_ramified_branch(RSpec({1, 1}), 2, 16)), {0, -4, -1, 0, 0, 0});
}

TEST(Vandermonde, BareissMatchesLeibniz)
{
    RandomR gen(31);
    for (int e = 2; e <= 5; ++e) {
        const PuiseuxBranchSet b = solve_ramified_branch(gen.next(e + 1, e + 3, 3), e, e * 10);
        const PowerSumTable sums(b, 2 * e - 2);
        std::vector<std::vector<Series>> m(static_cast<std::size_t>(e));
        for (int i = 0; i < e; ++i) {
            for (int j = 0; j < e; ++j) {
                m[i].push_back(sums[i + j]);
            }
        }
        const Series leib = oracle::leibniz_det<Series>(
            m, Series::constant(Rational(1), sums[0].precision()),
            [](const Series &x, const Series &y) { return x * y; },
            [](const Series &x, const Series &y) { return x + y; }, [](const Series &x) { return -x; },
            Series::zero(sums[0].precision()));
        const Series bareiss = hankel_determinant(sums, e);
        EXPECT_EQ(bareiss.valuation(), e - 1);
        const int k = std::min(leib.precision(), bareiss.precision());
        ASSERT_GT(k, e - 1);
        expect_equal_to(bareiss, leib, k);
    }
}

TEST(SymmetricProduct, Examples)
{
    for (int e = 1; e <= 3; ++e) {
        const PuiseuxBranchSet b = solve_ramified_branch(RSpec({1}), e, 3 * e);
        const PSeries one = symmetric_product(LaurentPolynomial(0, {1}), b);
        EXPECT_EQ(one, PSeries::constant(Rational(1), one.order()));
    }

    const RSpec r({1, 2, -1});
    const PuiseuxBranchSet single = solve_ramified_branch(r, 1, 10);
    const LaurentPolynomial a(0, {3, 1, 4});
    const PSeries got = symmetric_product(a, single);
    const Series want = compose(a.to_series(10), solve_unramified(r, 9));
    expect_equal_to(Series(got), want, std::min(got.order(), want.precision()));

    const PSeries quad = symmetric_product(LaurentPolynomial(0, {1, 1}), solve_ramified_branch(RSpec({1, 1}), 2, 16));
    EXPECT_EQ(quad, PSeries::constant(Rational(1), quad.order()));

    EXPECT_THROW(symmetric_product(LaurentPolynomial(1, {1}), single), series_domain_error);
}

TEST(SymmetricFunctions, TwoBranchOracle)
{
    RandomR gen(8);
    const int order_q = 8;
    const int order_t = 2 * (order_q + 4);
    for (int trial = 0; trial < 5; ++trial) {
        const RSpec r = gen.next(1, 5, 3);
        const PuiseuxBranchSet b = solve_ramified_branch(r, 2, order_t);
        const oracle::Poly g(b.g().coeffs().begin(), b.g().coeffs().end());
        const oracle::Poly g_neg = oracle::reflect(g);
        bool ok = true;

        const PowerSumTable sums(b, 2 * (order_q + 2));
        for (int m = 1; m <= 4; ++m) {
            const auto direct = oracle::even_part_in_q(
                oracle::add(oracle::power(g, m, order_t), oracle::power(g_neg, m, order_t)), ok);
            ASSERT_TRUE(ok);
            expect_series(sums[m], oracle::resized(direct, order_q));
        }
        const auto el = elementary_symmetric(sums);
        expect_series(el[1], oracle::resized(oracle::even_part_in_q(oracle::mul(g, g_neg, order_t), ok), order_q));
        const auto diff = oracle::add(g, oracle::scale(Rational(-1), g_neg));
        const auto vand = oracle::scale(Rational(-1), oracle::mul(diff, diff, order_t));
        expect_series(vandermonde_product(sums), oracle::resized(oracle::even_part_in_q(vand, ok), order_q));

        const std::vector<Rational> a{2, -1, 3};
        const auto direct_a = oracle::mul(oracle::compose(a, g, order_t), oracle::compose(a, g_neg, order_t), order_t);
        expect_series(Series(symmetric_product(a, sums)), oracle::resized(oracle::even_part_in_q(direct_a, ok), order_q));
        EXPECT_TRUE(ok);
    }
}

TEST(SymmetricFunctions, RootRelabelingInvariance)
{
    const RSpec plus({4, -1, 2, 1}, Rational(2));
    const RSpec minus({4, -1, 2, 1}, Rational(-2));
    const PuiseuxBranchSet bp = solve_ramified_branch(plus, 2, 20);
    const PuiseuxBranchSet bm = solve_ramified_branch(minus, 2, 20);
    ASSERT_NE(bp.g(), bm.g());
    for (int m = 1; m <= 5; ++m) {
        EXPECT_EQ(power_sum(bp, m), power_sum(bm, m));
    }
    const auto ep = elementary_symmetric(bp);
    const auto em = elementary_symmetric(bm);
    EXPECT_EQ(ep, em);
    EXPECT_EQ(vandermonde_product(bp), vandermonde_product(bm));
    const LaurentPolynomial a(0, {1, 2, 3});
    EXPECT_EQ(symmetric_product(a, bp), symmetric_product(a, bm));
}

TEST(SymmetricFunctions, ProductOfBranchesMatchesLogFormula)
{
    RandomR gen(41);
    for (int e = 1; e <= 3; ++e) {
        for (int trial = 0; trial < 4; ++trial) {
            const RSpec r = gen.next(1, 6, 3);
            const int n = 10;
            const PuiseuxBranchSet b = solve_ramified_branch(r, e, e * (n + 2));
            const Series ee = elementary_symmetric(b).back();
            const Rational sign = (e % 2 == 1) ? Rational(1) : Rational(-1);
            const Series want = (sign * r.constant_term()) * Series(series_exp(log_H_over_q(r, e, n))).shifted(1);
            expect_equal_to(ee, want, n + 1);
        }
    }
}

TEST(SymmetricFunctions, ProductOfBranchesLogFormulaNonUnitConstant)
{
    const int n = 8;
    const std::vector<std::pair<int, RSpec>> cases{
        {1, RSpec({3, -1, 2})},
        {2, RSpec({4, 1, -1, 2}, Rational(2))},
        {2, RSpec({4, 1, -1, 2}, Rational(-2))},
        {2, RSpec({Rational(1, 9), 2, 0, 1}, Rational(-1, 3))},
        {3, RSpec({8, 0, 1, -3, 1}, Rational(2))},
        {3, RSpec({-27, 1, 1}, Rational(-3))},
    };
    for (const auto &[e, r] : cases) {
        const PuiseuxBranchSet b = solve_ramified_branch(r, e, e * (n + 2));
        const Series ee = elementary_symmetric(b).back();
        const Rational sign = (e % 2 == 1) ? Rational(1) : Rational(-1);
        const Series want = (sign * r.constant_term()) * Series(series_exp(log_H_over_q(r, e, n))).shifted(1);
        expect_equal_to(ee, want, n + 1);
    }
}
