#ifndef LAGRANGE_SYMMETRIC_HPP
#define LAGRANGE_SYMMETRIC_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <lagrange/errors.hpp>
#include <lagrange/puiseux.hpp>
#include <lagrange/series_ops.hpp>

namespace lagrange
{

namespace detail
{

// Root-of-unity filter: sum_k f(zeta^k t) = e * sum_{e | s} [t^s] f, read as a
// series in q = t^e. Precision in q is the number of multiples of e below the
// t-precision.
inline Series filter_to_q(const Series &f_of_t, int e)
{
    const int prec_t = f_of_t.precision();
    const int prec_q = prec_t > 0 ? (prec_t + e - 1) / e : -((-prec_t) / e);
    const int low = f_of_t.valuation() >= 0 ? (f_of_t.valuation() + e - 1) / e : -((-f_of_t.valuation()) / e);
    if (low >= prec_q) {
        return Series::zero(prec_q);
    }
    std::vector<Rational> c(static_cast<std::size_t>(prec_q - low));
    const Rational ee(e);
    for (int j = low; j < prec_q; ++j) {
        c[static_cast<std::size_t>(j - low)] = ee * f_of_t.coeff(j * e);
    }
    return Series(low, std::move(c));
}

} // namespace detail

/// Power sums p_1..p_M of the branches, computed once and shared by every
/// symmetric function below. Entry 0 is p_0 = e.
class PowerSumTable
{
public:
    PowerSumTable(const PuiseuxBranchSet &branches, int max_power) : e_(branches.ramification())
    {
        if (max_power < 1) {
            throw series_domain_error("power sum table needs at least p_1");
        }
        const Series g(branches.g());
        sums_.reserve(static_cast<std::size_t>(max_power) + 1);
        Series gm = g;
        std::vector<Series> filtered;
        for (int m = 1; m <= max_power; ++m) {
            if (m > 1) {
                gm = gm * g;
            }
            filtered.push_back(detail::filter_to_q(gm, e_));
        }
        int top = 1;
        for (const auto &p : filtered) {
            top = std::max(top, p.precision());
        }
        sums_.push_back(Series::constant(Rational(e_), top));
        for (auto &p : filtered) {
            sums_.push_back(std::move(p));
        }
    }

    [[nodiscard]] int ramification() const noexcept { return e_; }
    [[nodiscard]] int max_power() const noexcept { return static_cast<int>(sums_.size()) - 1; }

    [[nodiscard]] const Series &operator[](int m) const
    {
        if (m < 0 || m > max_power()) {
            throw precision_exceeded("power sum p_" + std::to_string(m) + " not in table (max "
                                     + std::to_string(max_power()) + ")");
        }
        return sums_[static_cast<std::size_t>(m)];
    }

    /// Precision in q shared by every p_m with m >= 1.
    [[nodiscard]] int q_precision() const
    {
        int prec = sums_[1].precision();
        for (std::size_t m = 2; m < sums_.size(); ++m) {
            prec = std::min(prec, sums_[m].precision());
        }
        return prec;
    }

private:
    int e_;
    std::vector<Series> sums_;
};

/// p_m(q) = sum_k H_k(q)^m. Throws precision_exceeded when the branch data
/// cannot deliver `required_precision` q-coefficients.
inline Series power_sum(const PuiseuxBranchSet &branches, int m, int required_precision = 0)
{
    if (m < 1) {
        throw series_domain_error("power sum index must be positive");
    }
    const Series gm = pow_int(Series(branches.g()), m);
    Series p = detail::filter_to_q(gm, branches.ramification());
    if (p.precision() < required_precision) {
        throw precision_exceeded("p_" + std::to_string(m) + " known to q^" + std::to_string(p.precision())
                                 + ", needed q^" + std::to_string(required_precision) + " (branch order "
                                 + std::to_string(branches.working_order()) + ")");
    }
    return p;
}

/// e_1..e_e from p_1..p_e by Newton's identities
/// k e_k = sum_{i=1}^k (-1)^(i-1) e_{k-i} p_i.
inline std::vector<Series> elementary_symmetric(const PowerSumTable &sums)
{
    const int e = sums.ramification();
    std::vector<Series> el;
    el.reserve(static_cast<std::size_t>(e) + 1);
    el.push_back(Series::constant(Rational(1), sums[0].precision()));
    for (int k = 1; k <= e; ++k) {
        Series acc = Series::zero(sums[0].precision());
        for (int i = 1; i <= k; ++i) {
            const Series term = el[static_cast<std::size_t>(k - i)] * sums[i];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        el.push_back(Rational(1, k) * acc);
    }
    el.erase(el.begin());
    return el;
}

inline std::vector<Series> elementary_symmetric(const PuiseuxBranchSet &branches)
{
    return elementary_symmetric(PowerSumTable(branches, branches.ramification()));
}

/// Determinant of the n x n Hankel matrix [p_{i+j}] by fraction-free
/// (Bareiss) elimination over the Laurent series field, pivoting on the entry
/// of lowest valuation in each column.
inline Series hankel_determinant(const PowerSumTable &sums, int n)
{
    if (n == 0) {
        return Series::constant(Rational(1), sums[0].precision());
    }
    std::vector<std::vector<Series>> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m[i].push_back(sums[i + j]);
        }
    }
    bool negate = false;
    Series previous = Series::constant(Rational(1), sums[0].precision());
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r) {
            if (!m[r][k].is_zero() && (pivot < 0 || m[r][k].valuation() < m[pivot][k].valuation())) {
                pivot = r;
            }
        }
        if (pivot < 0) {
            int prec = m[k][k].precision();
            for (int r = k + 1; r < n; ++r) {
                prec = std::min(prec, m[r][k].precision());
            }
            // Column is zero to its precision; the determinant's valuation is
            // at least the sum of the column bounds, which we cannot sharpen.
            throw precision_exceeded("Hankel elimination found a column that is zero to precision "
                                     + std::to_string(prec));
        }
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            negate = !negate;
        }
        const Series previous_inv = invert(previous);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) * previous_inv;
            }
        }
        previous = m[k][k];
    }
    const Series &det = m[n - 1][n - 1];
    return negate ? -det : det;
}

/// prod_{i1 != i2} (H_{i2} - H_{i1}) = (-1)^(e(e-1)/2) det[p_{i+j}].
inline Series vandermonde_product(const PowerSumTable &sums)
{
    const int e = sums.ramification();
    if (e == 1) {
        return Series::constant(Rational(1), sums.q_precision());
    }
    Series det = hankel_determinant(sums, e);
    return ((e * (e - 1) / 2) % 2 == 1) ? -det : det;
}

inline Series vandermonde_product(const PuiseuxBranchSet &branches)
{
    const int e = branches.ramification();
    return vandermonde_product(PowerSumTable(branches, std::max(1, 2 * e - 2)));
}

/// prod_k A(H_k) = a_0^e exp(sum_m c_m p_m) where log(A/a_0) = sum_m c_m y^m.
///
/// A is known to order A.order(); the neglected tail contributes from
/// q^ceil(order/e) on, which bounds the result precision together with the
/// power sums.
inline PSeries symmetric_product(const PSeries &a, const PowerSumTable &sums)
{
    const Rational a0 = a[0];
    if (a0.is_zero()) {
        throw series_domain_error("symmetric_product needs A(0) != 0");
    }
    const int e = sums.ramification();
    const int tail_bound = (a.order() + e - 1) / e;
    int target = std::min(tail_bound, sums.q_precision());
    const int max_m = std::min(a.order() - 1, e * (target - 1));
    if (max_m > sums.max_power()) {
        target = std::min(target, sums.max_power() / e + 1);
    }
    if (target < 1) {
        throw precision_exceeded("symmetric_product has no known coefficients");
    }
    const PSeries log_a = series_log((Rational(1) / a0) * a);
    Series exponent = Series::zero(target);
    for (int m = 1; m <= std::min(a.order() - 1, e * (target - 1)); ++m) {
        if (!log_a[m].is_zero()) {
            exponent = exponent + log_a[m] * sums[m];
        }
    }
    return pow(a0, e) * series_exp(exponent.truncated(target).to_power_series());
}

/// Symmetric product of a polynomial: the order of A is chosen so that the
/// power sums, not A, limit the precision.
inline PSeries symmetric_product(std::span<const Rational> poly, const PowerSumTable &sums)
{
    const int e = sums.ramification();
    const int order = std::max(1, e * (sums.q_precision() - 1) + 1);
    return symmetric_product(PSeries::from_polynomial(poly, order), sums);
}

inline PSeries symmetric_product(const LaurentPolynomial &poly, const PuiseuxBranchSet &branches)
{
    if (poly.valuation() < 0) {
        throw series_domain_error("symmetric_product needs a polynomial without negative powers");
    }
    std::vector<Rational> dense(static_cast<std::size_t>(poly.degree()) + 1, Rational(0));
    for (int n = poly.valuation(); n <= poly.degree(); ++n) {
        dense[static_cast<std::size_t>(n)] = poly.coeff(n);
    }
    const int e = branches.ramification();
    const PowerSumTable sums(branches, std::max(1, e * (branches.q_precision() - 1)));
    return symmetric_product(dense, sums);
}

} // namespace lagrange

#endif
