#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <lagrange/puiseux.hpp>
#include <lagrange/random.hpp>

#include "oracles.hpp"

using namespace lagrange;

namespace
{

void expect_coeffs(const PSeries &s, const std::vector<Rational> &want)
{
    ASSERT_GE(s.order(), static_cast<int>(want.size()));
    for (std::size_t i = 0; i < want.size(); ++i) {
        EXPECT_EQ(s[static_cast<int>(i)], want[i]) << "coefficient " << i;
    }
}

// g^e - t^e R(g), root-free form of the branch residual.
Series branch_residual(const RSpec &r, const PuiseuxBranchSet &b)
{
    const Series g(b.g());
    const int e = b.ramification();
    const Series r_of_g = compose(Series(r.series(b.working_order())), b.g());
    return pow_int(g, e) - r_of_g.shifted(e);
}

} // namespace

TEST(RSpec, RejectsZeroConstantTerm)
{
    EXPECT_THROW(RSpec({0, 1}), series_domain_error);
    EXPECT_THROW(RSpec(std::vector<Rational>{}), series_domain_error);
}

TEST(RSpec, DesignatedRoot)
{
    EXPECT_EQ(RSpec({1, 2}).root_for(3), Rational(1));
    EXPECT_EQ(RSpec({5, 2}).root_for(1), Rational(5));
    EXPECT_EQ(RSpec({4, 1}, Rational(-2)).root_for(2), Rational(-2));
    EXPECT_THROW((void)RSpec({4, 1}).root_for(2), series_domain_error);
    EXPECT_THROW((void)RSpec({4, 1}, Rational(3)).root_for(2), series_domain_error);
    EXPECT_THROW((void)RSpec({1, 1}).root_for(0), series_domain_error);
}

TEST(SolveUnramified, Examples)
{
    expect_coeffs(solve_unramified(RSpec({1}), 6), {0, 1, 0, 0, 0, 0, 0});
    expect_coeffs(solve_unramified(RSpec({1, 1}), 8), {0, 1, 1, 1, 1, 1, 1, 1, 1});
    expect_coeffs(solve_unramified(RSpec({1, 2, 1}), 6), {0, 1, 2, 5, 14, 42, 132});
}

TEST(SolveUnramified, CatalanMatchesFixedPointOracle)
{
    const auto want = oracle::fixed_point({1, 2, 1}, 7);
    expect_coeffs(solve_unramified(RSpec({1, 2, 1}), 6), want);
}

TEST(SolveUnramified, ResidualVanishesOnRandomR)
{
    RandomR gen(1234);
    for (int trial = 0; trial < 15; ++trial) {
        const RSpec r = gen.next(1, 6, 4);
        const int n = 10;
        const PSeries h = solve_unramified(r, n);
        ASSERT_EQ(h.order(), n + 1);
        EXPECT_TRUE(h[0].is_zero());
        EXPECT_EQ(h[1], r.constant_term());
        const Series residual = Series(h) - compose(Series(r.series(n + 1)), h).shifted(1);
        for (int i = 0; i <= n; ++i) {
            EXPECT_TRUE(residual.coeff(i).is_zero());
        }
        std::vector<Rational> coeffs(r.coeffs().begin(), r.coeffs().end());
        expect_coeffs(h, oracle::fixed_point(coeffs, n + 1));
    }
}

TEST(SolveRamified, Examples)
{
    const PuiseuxBranchSet sqrt_q = solve_ramified_branch(RSpec({1}), 2, 6);
    expect_coeffs(sqrt_q.g(), {0, 1, 0, 0, 0, 0});

    const PuiseuxBranchSet b = solve_ramified_branch(RSpec({1, 1}), 2, 8);
    expect_coeffs(b.g(), {0, 1, Rational(1, 2), Rational(1, 8), 0, Rational(-1, 128), 0, Rational(1, 1024)});
    EXPECT_EQ(b.working_order(), 8);

    const RSpec r({2, -1, 3});
    EXPECT_EQ(solve_ramified_branch(r, 1, 9).g(), solve_unramified(r, 8));
}

TEST(SolveRamified, MatchesUndeterminedCoefficients)
{
    RandomR gen(77);
    for (int e = 2; e <= 4; ++e) {
        for (int trial = 0; trial < 5; ++trial) {
            const RSpec r = gen.next(1, 5, 3);
            const int n = 14;
            const PuiseuxBranchSet b = solve_ramified_branch(r, e, n);
            std::vector<Rational> coeffs(r.coeffs().begin(), r.coeffs().end());
            expect_coeffs(b.g(), oracle::branch_by_coefficients(coeffs, e, Rational(1), n));
        }
    }
}

TEST(SolveRamified, ResidualInvariant)
{
    RandomR gen(99);
    for (int e = 1; e <= 4; ++e) {
        for (int trial = 0; trial < 4; ++trial) {
            const RSpec r = gen.next(1, 6, 3);
            const PuiseuxBranchSet b = solve_ramified_branch(r, e, 16);
            EXPECT_TRUE(b.g()[0].is_zero());
            EXPECT_EQ(b.g()[1], Rational(1));
            const Series res = branch_residual(r, b);
            ASSERT_GE(res.precision(), 16);
            for (int i = 0; i < 16; ++i) {
                EXPECT_TRUE(res.coeff(i).is_zero()) << "e=" << e << " t^" << i;
            }
        }
    }
}

TEST(SolveRamified, NonUnitConstantWithRoot)
{
    // r_0 = 4, rho = 2 and rho = -2 give g(t) and g(-t).
    const RSpec plus({4, 1, 1}, Rational(2));
    const RSpec minus({4, 1, 1}, Rational(-2));
    const PuiseuxBranchSet bp = solve_ramified_branch(plus, 2, 12);
    const PuiseuxBranchSet bm = solve_ramified_branch(minus, 2, 12);
    EXPECT_EQ(bp.g()[1], Rational(2));
    std::vector<Rational> gp(bp.g().coeffs().begin(), bp.g().coeffs().end());
    expect_coeffs(bm.g(), oracle::reflect(gp));
    const Series res = branch_residual(plus, bp);
    for (int i = 0; i < 12; ++i) {
        EXPECT_TRUE(res.coeff(i).is_zero());
    }
}

TEST(SolveRamified, RejectsTinyOrder)
{
    EXPECT_THROW(solve_ramified_branch(RSpec({1, 1}), 2, 1), series_domain_error);
    EXPECT_THROW(solve_unramified(RSpec({1, 1}), 0), series_domain_error);
}
