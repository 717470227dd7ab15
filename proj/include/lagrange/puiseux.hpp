#ifndef LAGRANGE_PUISEUX_HPP
#define LAGRANGE_PUISEUX_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <lagrange/errors.hpp>
#include <lagrange/rational.hpp>
#include <lagrange/series.hpp>
#include <lagrange/series_ops.hpp>

namespace lagrange
{

using Series = LaurentSeries<Rational>;
using PSeries = PowerSeries<Rational>;

/// The polynomial R(z) = r_0 + r_1 z + ... + r_d z^d of the functional
/// equation H^e = q R(H), together with an optional designated e-th root
/// of r_0.
class RSpec
{
public:
    explicit RSpec(std::vector<Rational> coeffs, std::optional<Rational> root = std::nullopt)
        : coeffs_(std::move(coeffs)), root_(std::move(root))
    {
        if (coeffs_.empty() || coeffs_.front().is_zero()) {
            throw series_domain_error("r_0 must be nonzero");
        }
        while (coeffs_.size() > 1 && coeffs_.back().is_zero()) {
            coeffs_.pop_back();
        }
    }

    [[nodiscard]] std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] const Rational &constant_term() const noexcept { return coeffs_.front(); }
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::optional<Rational> &designated_root() const noexcept { return root_; }

    /// The root rho with rho^e = r_0 used to pick the branch g. Defaults to
    /// r_0 itself for e = 1 and to 1 when r_0 = 1.
    [[nodiscard]] Rational root_for(int e) const
    {
        if (e < 1) {
            throw series_domain_error("ramification index must be positive, got " + std::to_string(e));
        }
        Rational rho;
        if (root_) {
            rho = *root_;
        } else if (e == 1) {
            rho = constant_term();
        } else if (constant_term() == Rational(1)) {
            rho = Rational(1);
        } else {
            throw series_domain_error("r_0 = " + constant_term().to_string() + " needs an explicit root for e = "
                                      + std::to_string(e));
        }
        if (!(pow(rho, e) == constant_term())) {
            throw series_domain_error("designated root " + rho.to_string() + " does not satisfy rho^"
                                      + std::to_string(e) + " = " + constant_term().to_string());
        }
        return rho;
    }

    /// R as a power series of the given order (exact: the tail is zero).
    [[nodiscard]] PSeries series(int order) const { return PSeries::from_polynomial(coeffs_, order); }

    /// R'(z) coefficients.
    [[nodiscard]] std::vector<Rational> derivative_coeffs() const
    {
        std::vector<Rational> d;
        for (std::size_t n = 1; n < coeffs_.size(); ++n) {
            d.push_back(Rational(static_cast<long>(n)) * coeffs_[n]);
        }
        if (d.empty()) {
            d.emplace_back(0);
        }
        return d;
    }

    friend bool operator==(const RSpec &, const RSpec &) = default;

private:
    std::vector<Rational> coeffs_;
    std::optional<Rational> root_;
};

/// A finite Laurent polynomial sum_i coeffs[i] t^(valuation + i).
class LaurentPolynomial
{
public:
    LaurentPolynomial() = default;

    LaurentPolynomial(int valuation, std::vector<Rational> coeffs) : valuation_(valuation), coeffs_(std::move(coeffs))
    {
        const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return !c.is_zero(); });
        valuation_ += static_cast<int>(first - coeffs_.begin());
        coeffs_.erase(coeffs_.begin(), first);
        while (!coeffs_.empty() && coeffs_.back().is_zero()) {
            coeffs_.pop_back();
        }
        if (coeffs_.empty()) {
            valuation_ = 0;
        }
    }

    static LaurentPolynomial monomial(const Rational &c, int exponent) { return {exponent, {c}}; }

    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] int valuation() const noexcept { return valuation_; }
    // Exponent of the highest stored term (valuation - 1 when zero).
    [[nodiscard]] int degree() const noexcept { return valuation_ + static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    [[nodiscard]] Rational coeff(int n) const
    {
        if (n < valuation_ || n > degree()) {
            return Rational(0);
        }
        return coeffs_[static_cast<std::size_t>(n - valuation_)];
    }

    /// The polynomial as a Laurent series known to the given precision.
    [[nodiscard]] Series to_series(int precision) const
    {
        return Series::from_polynomial(valuation_, coeffs_, precision);
    }

private:
    int valuation_ = 0;
    std::vector<Rational> coeffs_;
};

/// The e Newton-Puiseux branches H_k(q) = g(zeta^k t), t = q^(1/e), of
/// H^e = q R(H), held through the single series g.
class PuiseuxBranchSet
{
public:
    PuiseuxBranchSet(int e, PSeries g) : e_(e), g_(std::move(g)) {}

    [[nodiscard]] int ramification() const noexcept { return e_; }
    [[nodiscard]] const PSeries &g() const noexcept { return g_; }
    [[nodiscard]] int working_order() const noexcept { return g_.order(); }

    /// Number of q-coefficients (from q^0) the branch data can support for
    /// symmetric quantities of degree one.
    [[nodiscard]] int q_precision() const noexcept { return (working_order() + e_ - 1) / e_; }

private:
    int e_;
    PSeries g_;
};

namespace detail
{

// Fixed point of g <- t * step(g). Each pass gains one t-order: with g known
// to order m, step(g) is known to order m and t*step(g) to order m + 1.
inline PSeries fixed_point_times_variable(const PSeries &step, int order)
{
    Series g = Series::zero(1);
    while (g.precision() < order) {
        const Series next = compose(Series(step), g.to_power_series()).shifted(1);
        g = next.truncated(std::min(order, next.precision()));
    }
    return g.to_power_series();
}

} // namespace detail

/// H(q) with H = q R(H), to order N + 1 (coefficients of q^0..q^N).
inline PSeries solve_unramified(const RSpec &r, int n)
{
    if (n < 1) {
        throw series_domain_error("order must be at least 1");
    }
    return detail::fixed_point_times_variable(r.series(n + 1), n + 1);
}

/// The series g(t) = t * rho * (R/r_0)^(1/e)(g(t)) to t-order order_t. Every
/// branch of H^e = q R(H) is g(zeta^k q^(1/e)).
inline PuiseuxBranchSet solve_ramified_branch(const RSpec &r, int e, int order_t)
{
    if (order_t < 2) {
        throw series_domain_error("branch working order must be at least 2");
    }
    const Rational rho = r.root_for(e);
    const Rational r0 = r.constant_term();
    const PSeries normalized = (Rational(1) / r0) * r.series(order_t);
    const PSeries step = rho * pow_rational(normalized, Rational(1, e));
    return PuiseuxBranchSet(e, detail::fixed_point_times_variable(step, order_t));
}

} // namespace lagrange

#endif
