#ifndef LAGRANGE_GESSEL_HPP
#define LAGRANGE_GESSEL_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include <lagrange/puiseux.hpp>
#include <lagrange/series_ops.hpp>

namespace lagrange
{

/// sum_k phi(H_k(q)) over the e branches of H^e = q R(H), by coefficient
/// extraction only:
///
///   e phi_0 + [t^-1]{phi'(t) log R(t)} + sum_{n != 0} (1/n) [t^(ne-1)]{phi'(t) R(t)^n} q^n
///
/// Result is known to q-precision n + 1. Only log(R/r_0) enters the second
/// term because phi' has no t^-1 coefficient.
inline Series gessel_phi_expansion(const LaurentPolynomial &phi, const RSpec &r, int e, int n)
{
    if (n < 1) {
        throw series_domain_error("order must be at least 1");
    }
    if (e < 1) {
        throw series_domain_error("ramification index must be positive");
    }
    const int precision = n + 1;
    if (phi.is_zero()) {
        return Series::zero(precision);
    }
    const int v = phi.valuation();
    const int top = phi.degree();

    // [t^(ne-1)]{phi' R^n} = sum_k k phi_k [t^(ne-k)] R^n.
    auto extract = [&](const PSeries &r_pow, int power) {
        Rational acc(0);
        for (int k = v; k <= top; ++k) {
            const int idx = power * e - k;
            if (k == 0 || idx < 0 || phi.coeff(k).is_zero()) {
                continue;
            }
            acc += Rational(k) * phi.coeff(k) * r_pow[idx];
        }
        return acc;
    };

    std::map<int, Rational> terms;
    terms[0] = Rational(e) * phi.coeff(0);

    if (v < 0) {
        const PSeries log_r = series_log((Rational(1) / r.constant_term()) * r.series(1 - v));
        Rational acc(0);
        for (int k = v; k < 0; ++k) {
            acc += Rational(k) * phi.coeff(k) * log_r[-k];
        }
        terms[0] += acc;
    }

    const int pos_order = std::max(1, n * e - v + 1);
    const PSeries r_series = r.series(pos_order);
    PSeries r_pow = PSeries::constant(Rational(1), pos_order);
    for (int power = 1; power <= n; ++power) {
        r_pow = r_pow * r_series;
        terms[power] += Rational(1, power) * extract(r_pow, power);
    }

    // Negative n contribute only while ne >= v, i.e. n >= ceil(v/e).
    if (v < 0) {
        const int neg_order = std::max(1, -v + 1);
        const PSeries r_inv = invert(r.series(neg_order));
        PSeries inv_pow = PSeries::constant(Rational(1), neg_order);
        for (int power = -1; power * e >= v; --power) {
            inv_pow = inv_pow * r_inv;
            terms[power] += Rational(1, power) * extract(inv_pow, power);
        }
    }

    const int low = terms.begin()->first;
    std::vector<Rational> dense(static_cast<std::size_t>(precision - low), Rational(0));
    for (const auto &[exponent, c] : terms) {
        dense[static_cast<std::size_t>(exponent - low)] = c;
    }
    return Series(low, std::move(dense));
}

/// sum_{m=1}^{n} (1/m) [t^(me)]{R^m} q^m, to order n + 1. For r_0 = 1 this is
/// log(prod_k H_k / ((-1)^(e+1) q)); in general the argument of the log is
/// additionally divided by r_0.
inline PSeries log_H_over_q(const RSpec &r, int e, int n)
{
    if (n < 1) {
        throw series_domain_error("order must be at least 1");
    }
    const int z_order = n * e + 1;
    const PSeries r_series = r.series(z_order);
    PSeries r_pow = PSeries::constant(Rational(1), z_order);
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int m = 1; m <= n; ++m) {
        r_pow = r_pow * r_series;
        c[static_cast<std::size_t>(m)] = Rational(1, m) * r_pow[m * e];
    }
    return PSeries(std::move(c));
}

} // namespace lagrange

#endif
