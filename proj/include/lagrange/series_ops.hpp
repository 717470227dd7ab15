#ifndef LAGRANGE_SERIES_OPS_HPP
#define LAGRANGE_SERIES_OPS_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <lagrange/errors.hpp>
#include <lagrange/series.hpp>

namespace lagrange
{

/// [z^n] a. Zero below the valuation; precision_exceeded when n is not below
/// the tracked precision.
template <class K>
K coeff_extract(const LaurentSeries<K> &a, int n)
{
    return a.coeff(n);
}

template <class K>
K coeff_extract(const PowerSeries<K> &a, int n)
{
    if (n < 0) {
        return K(0);
    }
    return a[n];
}

/// Multiplicative inverse. The valuation is negated and the relative
/// precision is preserved.
template <class K>
LaurentSeries<K> invert(const LaurentSeries<K> &a)
{
    if (a.is_zero()) {
        throw division_by_zero("inverting a series that is zero to precision " + std::to_string(a.precision()));
    }
    const auto c = a.coeffs();
    const int len = a.relative_precision();
    const K inv0 = K(1) / c[0];
    std::vector<K> b(static_cast<std::size_t>(len), K(0));
    b[0] = inv0;
    for (int n = 1; n < len; ++n) {
        K acc(0);
        for (int k = 1; k <= n; ++k) {
            if (!(c[k] == K(0))) {
                acc += c[k] * b[n - k];
            }
        }
        b[n] = -(inv0 * acc);
    }
    return LaurentSeries<K>(-a.valuation(), std::move(b));
}

template <class K>
PowerSeries<K> invert(const PowerSeries<K> &a)
{
    if (a[0] == K(0)) {
        throw division_by_zero("power series with zero constant term is not a unit");
    }
    return invert(LaurentSeries<K>(a)).to_power_series();
}

/// a^k for any integer k by binary powering; negative k goes through invert.
template <class K>
LaurentSeries<K> pow_int(const LaurentSeries<K> &a, long k, int cap = exact_precision)
{
    if (k == 0) {
        return LaurentSeries<K>::constant(K(1), std::min(cap, std::max(1, a.relative_precision())));
    }
    LaurentSeries<K> base = k < 0 ? invert(a) : a;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    std::optional<LaurentSeries<K>> result;
    while (true) {
        if (e & 1u) {
            result = result ? multiply(*result, base, cap) : base;
        }
        e >>= 1u;
        if (e == 0) {
            break;
        }
        base = multiply(base, base, cap);
    }
    return result->truncated(std::min(cap, result->precision()));
}

/// Termwise derivative; the precision drops by one.
template <class K>
LaurentSeries<K> derivative(const LaurentSeries<K> &a)
{
    const int prec = a.precision() - 1;
    if (a.is_zero()) {
        return LaurentSeries<K>::zero(prec);
    }
    const int v = a.valuation() - 1;
    std::vector<K> c(static_cast<std::size_t>(std::max(0, prec - v)), K(0));
    for (int n = a.valuation(); n <= prec; ++n) {
        c[static_cast<std::size_t>(n - 1 - v)] = K(n) * a.coeff(n);
    }
    return LaurentSeries<K>(v, std::move(c));
}

template <class K>
PowerSeries<K> derivative(const PowerSeries<K> &a)
{
    if (a.order() < 2) {
        throw precision_exceeded("derivative of a series of order 1 carries no information");
    }
    std::vector<K> c(static_cast<std::size_t>(a.order() - 1));
    for (int n = 1; n < a.order(); ++n) {
        c[n - 1] = K(n) * a[n];
    }
    return PowerSeries<K>(std::move(c));
}

/// a(b) for a Laurent series a and a power series b with b(0) = 0.
///
/// The result precision is the smaller of the truncation error O(b^prec(a))
/// and the precision of each b^k that appears with a nonzero coefficient.
/// Negative powers of b need b to be nonzero to its precision.
template <class K>
LaurentSeries<K> compose(const LaurentSeries<K> &a, const PowerSeries<K> &b)
{
    if (!(b[0] == K(0))) {
        throw series_domain_error("composition with a series that has a nonzero constant term");
    }
    const LaurentSeries<K> inner(b);
    const int w = inner.valuation();
    const int lb = inner.relative_precision();
    const bool needs_inverse = !a.is_zero() && a.valuation() < 0;
    if (inner.is_zero() && (needs_inverse || a.precision() < 0)) {
        throw series_domain_error("negative powers of a series that is zero to its precision");
    }

    int target = a.precision() * w;
    for (int k = a.valuation(); k < a.precision(); ++k) {
        if (k != 0 && !(a.coeff(k) == K(0))) {
            target = std::min(target, k * w + lb);
        }
    }

    LaurentSeries<K> result = LaurentSeries<K>::zero(target);
    if (a.valuation() <= 0 && a.precision() > 0) {
        result = result + LaurentSeries<K>::constant(a.coeff(0), target);
    }
    if (a.precision() > 1) {
        LaurentSeries<K> power = inner.truncated(std::min(target, inner.precision()));
        for (int k = 1; k < a.precision(); ++k) {
            if (k > 1) {
                power = multiply(power, inner, target);
            }
            if (power.valuation() >= target) {
                break;
            }
            if (k >= a.valuation() && !(a.coeff(k) == K(0))) {
                result = result + a.coeff(k) * power;
            }
        }
    }
    if (needs_inverse) {
        const LaurentSeries<K> inner_inv = invert(inner);
        LaurentSeries<K> power = inner_inv;
        // No cap here: each step lowers the valuation, so truncating early
        // would cost relative precision in the next product.
        for (int k = -1; k >= a.valuation(); --k) {
            if (k < -1) {
                power = power * inner_inv;
            }
            if (!(a.coeff(k) == K(0))) {
                result = result + a.coeff(k) * power;
            }
        }
    }
    return result.truncated(std::min(target, result.precision()));
}

/// log(a) for a with valuation 0 and constant term 1, from the recurrence
/// n b_n = n a_n - sum_{k=1}^{n-1} k b_k a_{n-k}.
template <class K>
PowerSeries<K> series_log(const LaurentSeries<K> &a)
{
    if (a.precision() <= 0 || a.valuation() != 0 || !(a.coeff(0) == K(1))) {
        throw series_domain_error("log needs a series with constant term 1");
    }
    const int order = a.precision();
    std::vector<K> b(static_cast<std::size_t>(order), K(0));
    for (int n = 1; n < order; ++n) {
        K acc = K(n) * a.coeff(n);
        for (int k = 1; k < n; ++k) {
            const K an = a.coeff(n - k);
            if (!(an == K(0)) && !(b[k] == K(0))) {
                acc -= K(k) * b[k] * an;
            }
        }
        b[n] = acc / K(n);
    }
    return PowerSeries<K>(std::move(b));
}

template <class K>
PowerSeries<K> series_log(const PowerSeries<K> &a)
{
    return series_log(LaurentSeries<K>(a));
}

/// exp(a) for a with zero constant term, from n f_n = sum_{k=1}^n k a_k f_{n-k}.
template <class K>
PowerSeries<K> series_exp(const PowerSeries<K> &a)
{
    if (!(a[0] == K(0))) {
        throw series_domain_error("exp needs a series with zero constant term");
    }
    const int order = a.order();
    std::vector<K> f(static_cast<std::size_t>(order), K(0));
    f[0] = K(1);
    for (int n = 1; n < order; ++n) {
        K acc(0);
        for (int k = 1; k <= n; ++k) {
            if (!(a[k] == K(0))) {
                acc += K(k) * a[k] * f[n - k];
            }
        }
        f[n] = acc / K(n);
    }
    return PowerSeries<K>(std::move(f));
}

/// a^r for a rational exponent r and a with constant term 1, using
/// n f_n = sum_{k=1}^n ((r+1)k - n) a_k f_{n-k}.
template <class K>
PowerSeries<K> pow_rational(const PowerSeries<K> &a, const K &r)
{
    if (!(a[0] == K(1))) {
        throw series_domain_error("rational power needs a series with constant term 1");
    }
    const int order = a.order();
    std::vector<K> f(static_cast<std::size_t>(order), K(0));
    f[0] = K(1);
    const K r1 = r + K(1);
    for (int n = 1; n < order; ++n) {
        K acc(0);
        for (int k = 1; k <= n; ++k) {
            if (!(a[k] == K(0))) {
                acc += (r1 * K(k) - K(n)) * a[k] * f[n - k];
            }
        }
        f[n] = acc / K(n);
    }
    return PowerSeries<K>(std::move(f));
}

} // namespace lagrange

#endif
