#ifndef LAGRANGE_RANDOM_HPP
#define LAGRANGE_RANDOM_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include <lagrange/puiseux.hpp>

namespace lagrange
{

/// Seeded generator of random R for verification campaigns.
///
/// State: Knuth's MMIX linear congruential generator
///   x_{k+1} = 6364136223846793005 * x_k + 1442695040888963407  (mod 2^64)
/// seeded with x_0 = seed. A draw below n is ((x >> 32) mod n) using the
/// freshly advanced state.
///
/// One R consumes, in order: one draw for the degree d in [deg_min, deg_max];
/// one draw per coefficient r_1..r_{d-1}, each mapped to [-B, B]; then draws
/// for r_d until a nonzero value appears. r_0 is always 1.
class RandomR
{
public:
    using engine_type = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0ULL>;

    explicit RandomR(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n)
    {
        if (n == 0) {
            throw std::invalid_argument("empty draw range");
        }
        return (engine_() >> 32U) % n;
    }

    /// Uniform integer in [-bound, bound].
    long symmetric(long bound)
    {
        return static_cast<long>(below(2 * static_cast<std::uint64_t>(bound) + 1)) - bound;
    }

    RSpec next(int deg_min, int deg_max, long coeff_bound)
    {
        if (deg_min < 1 || deg_max < deg_min) {
            throw std::invalid_argument("need 1 <= deg_min <= deg_max");
        }
        if (coeff_bound < 1) {
            throw std::invalid_argument("coefficient bound must be positive");
        }
        const int degree = deg_min + static_cast<int>(below(static_cast<std::uint64_t>(deg_max - deg_min) + 1));
        std::vector<Rational> c{Rational(1)};
        for (int i = 1; i < degree; ++i) {
            c.emplace_back(symmetric(coeff_bound));
        }
        long lead = 0;
        while (lead == 0) {
            lead = symmetric(coeff_bound);
        }
        c.emplace_back(lead);
        return RSpec(std::move(c));
    }

private:
    engine_type engine_;
};

} // namespace lagrange

#endif
