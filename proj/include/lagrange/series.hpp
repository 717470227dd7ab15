#ifndef LAGRANGE_SERIES_HPP
#define LAGRANGE_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <lagrange/errors.hpp>
#include <lagrange/rational.hpp>

namespace lagrange
{

// Sentinel cap meaning "no truncation beyond what the operands imply".
inline constexpr int exact_precision = std::numeric_limits<int>::max() / 4;

/// Truncated formal power series sum_{n < order} c_n z^n + O(z^order).
///
/// Coefficients at exponents >= order are unknown, never implicitly zero:
/// reading one throws precision_exceeded.
template <class K = Rational>
class PowerSeries
{
public:
    using coefficient_type = K;

    /// Zero series of order 1.
    PowerSeries() : coeffs_(1, K(0)) {}

    explicit PowerSeries(std::vector<K> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw series_domain_error("power series must have positive order");
        }
    }

    PowerSeries(std::initializer_list<K> coeffs) : PowerSeries(std::vector<K>(coeffs)) {}

    static PowerSeries zero(int order) { return PowerSeries(std::vector<K>(checked_order(order), K(0))); }

    static PowerSeries constant(const K &c, int order)
    {
        auto s = zero(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// The variable z itself, truncated at the given order (>= 2).
    static PowerSeries variable(int order) { return monomial(K(1), 1, order); }

    static PowerSeries monomial(const K &c, int exponent, int order)
    {
        auto s = zero(order);
        if (exponent < order) {
            s.coeffs_[static_cast<std::size_t>(exponent)] = c;
        }
        return s;
    }

    /// A polynomial viewed as a series: coefficients past its degree are
    /// known zeros, so any order is legitimate.
    static PowerSeries from_polynomial(std::span<const K> coeffs, int order)
    {
        auto s = zero(order);
        const auto n = std::min<std::size_t>(coeffs.size(), static_cast<std::size_t>(order));
        std::copy_n(coeffs.begin(), n, s.coeffs_.begin());
        return s;
    }

    [[nodiscard]] int order() const noexcept { return static_cast<int>(coeffs_.size()); }
    [[nodiscard]] std::span<const K> coeffs() const noexcept { return coeffs_; }

    [[nodiscard]] const K &operator[](int n) const
    {
        if (n < 0 || n >= order()) {
            throw precision_exceeded("coefficient z^" + std::to_string(n) + " requested from a series of order "
                                     + std::to_string(order()));
        }
        return coeffs_[static_cast<std::size_t>(n)];
    }

    [[nodiscard]] PowerSeries truncated(int new_order) const
    {
        if (new_order > order()) {
            throw precision_exceeded("cannot raise order " + std::to_string(order()) + " to "
                                     + std::to_string(new_order));
        }
        return PowerSeries(std::vector<K>(coeffs_.begin(), coeffs_.begin() + checked_order(new_order)));
    }

    friend PowerSeries operator+(const PowerSeries &a, const PowerSeries &b)
    {
        const int n = std::min(a.order(), b.order());
        std::vector<K> c(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            c[i] = a.coeffs_[i] + b.coeffs_[i];
        }
        return PowerSeries(std::move(c));
    }

    friend PowerSeries operator-(const PowerSeries &a, const PowerSeries &b)
    {
        const int n = std::min(a.order(), b.order());
        std::vector<K> c(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            c[i] = a.coeffs_[i] - b.coeffs_[i];
        }
        return PowerSeries(std::move(c));
    }

    friend PowerSeries operator-(const PowerSeries &a)
    {
        std::vector<K> c(a.coeffs_.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = -a.coeffs_[i];
        }
        return PowerSeries(std::move(c));
    }

    // Schoolbook product; order of the result is min(order(a), order(b)).
    friend PowerSeries operator*(const PowerSeries &a, const PowerSeries &b)
    {
        const int n = std::min(a.order(), b.order());
        std::vector<K> c(static_cast<std::size_t>(n), K(0));
        for (int i = 0; i < n; ++i) {
            if (a.coeffs_[i] == K(0)) {
                continue;
            }
            for (int j = 0; i + j < n; ++j) {
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return PowerSeries(std::move(c));
    }

    friend PowerSeries operator*(const K &s, const PowerSeries &a)
    {
        std::vector<K> c(a.coeffs_.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = s * a.coeffs_[i];
        }
        return PowerSeries(std::move(c));
    }

    friend bool operator==(const PowerSeries &, const PowerSeries &) = default;

    /// True iff both orders are >= k and coefficients 0..k-1 agree.
    friend bool equal_to_order(const PowerSeries &a, const PowerSeries &b, int k)
    {
        if (a.order() < k || b.order() < k) {
            return false;
        }
        return std::equal(a.coeffs_.begin(), a.coeffs_.begin() + k, b.coeffs_.begin());
    }

    friend std::ostream &operator<<(std::ostream &os, const PowerSeries &a)
    {
        bool first = true;
        for (int i = 0; i < a.order(); ++i) {
            if (a.coeffs_[i] == K(0)) {
                continue;
            }
            os << (first ? "" : " + ") << a.coeffs_[i];
            if (i > 0) {
                os << "*z^" << i;
            }
            first = false;
        }
        return os << (first ? "" : " + ") << "O(z^" << a.order() << ")";
    }

private:
    static int checked_order(int order)
    {
        if (order <= 0) {
            throw series_domain_error("power series must have positive order, got " + std::to_string(order));
        }
        return order;
    }

    std::vector<K> coeffs_;
};

/// Truncated Laurent series z^v (c_0 + c_1 z + ...) + O(z^precision).
///
/// Stored densely from the valuation up to precision - 1. The coefficient at
/// the valuation is nonzero; a series that is zero to its precision has
/// valuation == precision and no stored coefficients.
template <class K = Rational>
class LaurentSeries
{
public:
    using coefficient_type = K;

    /// O(z^0).
    LaurentSeries() = default;

    LaurentSeries(int valuation, std::vector<K> coeffs) : valuation_(valuation), coeffs_(std::move(coeffs)) { normalize(); }

    LaurentSeries(const PowerSeries<K> &p)
        : LaurentSeries(0, std::vector<K>(p.coeffs().begin(), p.coeffs().end()))
    {
    }

    static LaurentSeries zero(int precision)
    {
        LaurentSeries s;
        s.valuation_ = precision;
        return s;
    }

    /// c + O(z^precision).
    static LaurentSeries constant(const K &c, int precision) { return monomial(c, 0, precision); }

    /// c z^exponent + O(z^precision); zero when exponent >= precision.
    static LaurentSeries monomial(const K &c, int exponent, int precision)
    {
        if (exponent >= precision || c == K(0)) {
            return zero(precision);
        }
        LaurentSeries s;
        s.valuation_ = exponent;
        s.coeffs_.assign(static_cast<std::size_t>(precision - exponent), K(0));
        s.coeffs_[0] = c;
        return s;
    }

    /// Finite Laurent polynomial sum_i coeffs[i] z^(valuation + i), tracked to
    /// the given precision.
    static LaurentSeries from_polynomial(int valuation, std::span<const K> coeffs, int precision)
    {
        if (precision <= valuation) {
            return zero(precision);
        }
        std::vector<K> c(static_cast<std::size_t>(precision - valuation), K(0));
        std::copy_n(coeffs.begin(), std::min(coeffs.size(), c.size()), c.begin());
        return LaurentSeries(valuation, std::move(c));
    }

    [[nodiscard]] int valuation() const noexcept { return valuation_; }
    [[nodiscard]] int precision() const noexcept { return valuation_ + static_cast<int>(coeffs_.size()); }
    // Number of known coefficients from the valuation on.
    [[nodiscard]] int relative_precision() const noexcept { return static_cast<int>(coeffs_.size()); }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] std::span<const K> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] const K &leading_coefficient() const
    {
        if (is_zero()) {
            throw division_by_zero("series is zero to its precision");
        }
        return coeffs_.front();
    }

    /// Coefficient of z^n: zero below the valuation, precision_exceeded at or
    /// above the precision.
    [[nodiscard]] K coeff(int n) const
    {
        if (n >= precision()) {
            throw precision_exceeded("coefficient z^" + std::to_string(n) + " requested from a series of precision "
                                     + std::to_string(precision()));
        }
        if (n < valuation_) {
            return K(0);
        }
        return coeffs_[static_cast<std::size_t>(n - valuation_)];
    }

    [[nodiscard]] LaurentSeries truncated(int new_precision) const
    {
        if (new_precision > precision()) {
            throw precision_exceeded("cannot raise precision " + std::to_string(precision()) + " to "
                                     + std::to_string(new_precision));
        }
        if (new_precision <= valuation_) {
            return zero(new_precision);
        }
        return LaurentSeries(valuation_,
                             std::vector<K>(coeffs_.begin(), coeffs_.begin() + (new_precision - valuation_)));
    }

    /// Multiplication by z^k.
    [[nodiscard]] LaurentSeries shifted(int k) const
    {
        LaurentSeries s = *this;
        s.valuation_ += k;
        return s;
    }

    /// The series as a power series of order precision(). Requires no
    /// negative exponents and a positive precision.
    [[nodiscard]] PowerSeries<K> to_power_series() const
    {
        if (precision() <= 0) {
            throw precision_exceeded("series of precision " + std::to_string(precision())
                                     + " has no known nonnegative coefficients");
        }
        if (valuation_ < 0) {
            throw series_domain_error("series with valuation " + std::to_string(valuation_)
                                      + " is not a power series");
        }
        std::vector<K> c(static_cast<std::size_t>(precision()), K(0));
        std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + valuation_);
        return PowerSeries<K>(std::move(c));
    }

    friend LaurentSeries operator+(const LaurentSeries &a, const LaurentSeries &b) { return add(a, b, false); }
    friend LaurentSeries operator-(const LaurentSeries &a, const LaurentSeries &b) { return add(a, b, true); }

    friend LaurentSeries operator-(const LaurentSeries &a)
    {
        LaurentSeries s = a;
        for (auto &c : s.coeffs_) {
            c = -c;
        }
        return s;
    }

    friend LaurentSeries operator*(const K &s, const LaurentSeries &a)
    {
        if (s == K(0)) {
            return zero(a.precision());
        }
        LaurentSeries r = a;
        for (auto &c : r.coeffs_) {
            c = s * c;
        }
        return r;
    }

    // precision(a*b) = v(a) + v(b) + min(relative precisions).
    friend LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b) { return multiply(a, b); }

    /// Product with the result additionally truncated at `cap`, skipping the
    /// work for discarded terms.
    friend LaurentSeries multiply(const LaurentSeries &a, const LaurentSeries &b, int cap = exact_precision)
    {
        const int v = a.valuation_ + b.valuation_;
        int len = std::min(a.relative_precision(), b.relative_precision());
        const int prec = std::min(v + len, cap);
        if (prec <= v) {
            return zero(prec);
        }
        len = prec - v;
        std::vector<K> c(static_cast<std::size_t>(len), K(0));
        for (int i = 0; i < len; ++i) {
            const K &ai = a.coeffs_[i];
            if (ai == K(0)) {
                continue;
            }
            for (int j = 0; i + j < len; ++j) {
                c[i + j] += ai * b.coeffs_[j];
            }
        }
        return LaurentSeries(v, std::move(c));
    }

    friend bool operator==(const LaurentSeries &, const LaurentSeries &) = default;

    friend std::ostream &operator<<(std::ostream &os, const LaurentSeries &a)
    {
        bool first = true;
        for (int i = 0; i < a.relative_precision(); ++i) {
            if (a.coeffs_[i] == K(0)) {
                continue;
            }
            os << (first ? "" : " + ") << a.coeffs_[i];
            if (a.valuation_ + i != 0) {
                os << "*z^" << a.valuation_ + i;
            }
            first = false;
        }
        return os << (first ? "" : " + ") << "O(z^" << a.precision() << ")";
    }

private:
    static LaurentSeries add(const LaurentSeries &a, const LaurentSeries &b, bool subtract)
    {
        const int prec = std::min(a.precision(), b.precision());
        const int v = std::min(a.valuation_, b.valuation_);
        if (prec <= v) {
            return zero(prec);
        }
        std::vector<K> c(static_cast<std::size_t>(prec - v), K(0));
        for (int n = v; n < prec; ++n) {
            auto &slot = c[static_cast<std::size_t>(n - v)];
            if (n >= a.valuation_) {
                slot = a.coeffs_[static_cast<std::size_t>(n - a.valuation_)];
            }
            if (n >= b.valuation_) {
                const auto &bc = b.coeffs_[static_cast<std::size_t>(n - b.valuation_)];
                if (subtract) {
                    slot -= bc;
                } else {
                    slot += bc;
                }
            }
        }
        return LaurentSeries(v, std::move(c));
    }

    void normalize()
    {
        const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const K &c) { return !(c == K(0)); });
        valuation_ += static_cast<int>(first - coeffs_.begin());
        coeffs_.erase(coeffs_.begin(), first);
    }

    int valuation_ = 0;
    std::vector<K> coeffs_;
};

} // namespace lagrange

#endif
