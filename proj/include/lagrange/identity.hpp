#ifndef LAGRANGE_IDENTITY_HPP
#define LAGRANGE_IDENTITY_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <lagrange/errors.hpp>
#include <lagrange/puiseux.hpp>
#include <lagrange/series_ops.hpp>
#include <lagrange/symmetric.hpp>

namespace lagrange
{

/// Branch t-order used to deliver q-order n for ramification e. The
/// Vandermonde factor divides by q^(e-1) and prod H_k^e carries q^e.
constexpr int working_order_for(int e, int n) noexcept
{
    return e * (n + e + 2);
}

/// G_e(R) = exp(-sum_{n,m>0} sum_{j=1}^{ne} j/(mn) [z^(me+j)]{R^m} [z^(ne-j)]{R^n} q^(n+m))
/// to order n + 1. Terms with j > ne vanish since R^n has no negative powers.
inline PSeries lhs_G(const RSpec &r, int e, int n)
{
    if (n < 1) {
        throw series_domain_error("order must be at least 1");
    }
    if (e < 1) {
        throw series_domain_error("ramification index must be positive");
    }
    const int z_order = n * e + 1;
    const PSeries r_series = r.series(z_order);
    std::vector<PSeries> powers{PSeries::constant(Rational(1), z_order)};
    for (int k = 1; k < n; ++k) {
        powers.push_back(powers.back() * r_series);
    }

    std::vector<Rational> exponent(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int total = 2; total <= n; ++total) {
        Rational acc(0);
        for (int nn = 1; nn < total; ++nn) {
            const int mm = total - nn;
            const PSeries &rn = powers[static_cast<std::size_t>(nn)];
            const PSeries &rm = powers[static_cast<std::size_t>(mm)];
            Rational inner(0);
            for (int j = 1; j <= nn * e; ++j) {
                const Rational &high = rm[mm * e + j];
                const Rational &low = rn[nn * e - j];
                if (!high.is_zero() && !low.is_zero()) {
                    inner += Rational(j) * high * low;
                }
            }
            if (!inner.is_zero()) {
                acc += inner / Rational(static_cast<long>(nn) * mm);
            }
        }
        exponent[static_cast<std::size_t>(total)] = -acc;
    }
    return series_exp(PSeries(std::move(exponent)));
}

/// The four factors of the branch-product side, each a symmetric function of
/// the branches.
struct ProductFactors {
    Series root_ratio;   // prod R(H_k) / r_0^e
    Series branch_power; // (prod H_k)^e
    Series inverse_vandermonde; // prod_{i1 != i2} 1/(H_{i2} - H_{i1})
    Series log_derivative; // prod (e/H_k - R'(H_k)/R(H_k))
    Series product;
};

/// Evaluates every factor of the branch-product formula to q-order n + 1.
///
/// prod (e/H - R'(H)/R(H)) is taken as prod A(H) / (prod H * prod R(H)) with
/// A(y) = e R(y) - y R'(y), so every intermediate is a genuine Laurent series.
inline ProductFactors rhs_factors(const RSpec &r, int e, int n)
{
    if (n < 1) {
        throw series_domain_error("order must be at least 1");
    }
    const int working = working_order_for(e, n);
    const PuiseuxBranchSet branches = solve_ramified_branch(r, e, working);
    const int q_prec = branches.q_precision();
    const PowerSumTable sums(branches, std::max(2 * e - 1, e * (q_prec - 1)));

    const std::vector<Rational> deriv = r.derivative_coeffs();
    std::vector<Rational> a_poly(r.coeffs().size() + 1, Rational(0));
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) {
        a_poly[i] = Rational(e) * r.coeffs()[i];
    }
    for (std::size_t i = 0; i < deriv.size(); ++i) {
        a_poly[i + 1] -= deriv[i];
    }

    const Series prod_r = symmetric_product(r.coeffs(), sums);
    const Series prod_a = symmetric_product(a_poly, sums);
    const Series prod_h = elementary_symmetric(sums).back();

    ProductFactors f;
    f.root_ratio = (Rational(1) / pow(r.constant_term(), e)) * prod_r;
    f.branch_power = pow_int(prod_h, e);
    f.inverse_vandermonde = invert(vandermonde_product(sums));
    f.log_derivative = prod_a * invert(prod_h * prod_r);
    f.product = f.root_ratio * f.branch_power * f.inverse_vandermonde * f.log_derivative;

    if (f.product.precision() < n + 1) {
        throw precision_exceeded("branch product known to q^" + std::to_string(f.product.precision())
                                 + ", needed q^" + std::to_string(n + 1) + " (working order "
                                 + std::to_string(working) + " in t = q^(1/" + std::to_string(e) + "))");
    }
    if (f.product.valuation() < 0) {
        throw internal_consistency_error("branch product has a nonzero coefficient at q^"
                                         + std::to_string(f.product.valuation()));
    }
    f.product = f.product.truncated(n + 1);
    return f;
}

/// The branch-product side to q-order n + 1.
inline Series rhs_product(const RSpec &r, int e, int n)
{
    return rhs_factors(r, e, n).product;
}

/// e = 1 closed form (R(H)/r_0) (1 - H R'(H)/R(H)) with H = q R(H).
inline PSeries corollary_rhs(const RSpec &r, int n)
{
    const PSeries h = solve_unramified(r, n);
    const int order = n + 1;
    const Series r_of_h = compose(Series(r.series(order)), h);
    const Series dr_of_h = compose(Series(PSeries::from_polynomial(r.derivative_coeffs(), order)), h);
    const Series one = Series::constant(Rational(1), order);
    const Series value = ((Rational(1) / r.constant_term()) * r_of_h) * (one - dr_of_h * Series(h) * invert(r_of_h));
    return value.truncated(order).to_power_series();
}

/// Outcome of comparing both sides coefficientwise through q^order.
struct VerificationReport {
    RSpec r;
    int e = 1;
    int order = 1;
    std::vector<Rational> lhs;
    std::vector<Rational> rhs;
    bool equal = false;
    std::optional<int> first_mismatch;
};

inline VerificationReport make_report(const RSpec &r, int e, int n, std::vector<Rational> lhs, std::vector<Rational> rhs)
{
    VerificationReport rep{r, e, n, std::move(lhs), std::move(rhs), true, std::nullopt};
    for (std::size_t i = 0; i < rep.lhs.size(); ++i) {
        if (!(rep.lhs[i] == rep.rhs[i])) {
            rep.equal = false;
            rep.first_mismatch = static_cast<int>(i);
            break;
        }
    }
    return rep;
}

inline VerificationReport verify(const RSpec &r, int e, int n)
{
    const PSeries lhs = lhs_G(r, e, n);
    const Series rhs = rhs_product(r, e, n);
    std::vector<Rational> l(static_cast<std::size_t>(n) + 1), rr(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        l[static_cast<std::size_t>(i)] = lhs[i];
        rr[static_cast<std::size_t>(i)] = rhs.coeff(i);
    }
    return make_report(r, e, n, std::move(l), std::move(rr));
}

} // namespace lagrange

#endif
