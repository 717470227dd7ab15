#ifndef LAGRANGE_RATIONAL_HPP
#define LAGRANGE_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include <lagrange/errors.hpp>

namespace lagrange
{

/// Exact rational number over arbitrary-precision integers.
///
/// Thin value wrapper around GMP's mpq_class. Every instance is kept in
/// lowest terms with a positive denominator, so structural equality is
/// numeric equality.
class Rational
{
public:
    Rational() = default;
    Rational(int v) : value_(v) {}
    Rational(long v) : value_(v) {}
    Rational(long long v) : value_(mpz_class(std::to_string(v))) {}

    Rational(const mpz_class &num, const mpz_class &den)
    {
        if (den == 0) {
            throw division_by_zero("rational with zero denominator");
        }
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    /// Parses "p" or "p/q" with optional leading sign on p. Whitespace,
    /// empty components and zero denominators are rejected.
    static Rational parse(std::string_view text)
    {
        auto fail = [&](const char *why) {
            return parse_error("malformed rational \"" + std::string(text) + "\": " + why);
        };
        auto is_integer = [](std::string_view s, bool allow_sign) {
            if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
                s.remove_prefix(1);
            }
            if (s.empty()) {
                return false;
            }
            for (char c : s) {
                if (c < '0' || c > '9') {
                    return false;
                }
            }
            return true;
        };

        const auto slash = text.find('/');
        std::string_view num = text.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        if (!is_integer(num, true)) {
            throw fail("bad numerator");
        }
        if (!is_integer(den, false)) {
            throw fail("bad denominator");
        }
        std::string num_str(num.front() == '+' ? num.substr(1) : num);
        mpz_class n(num_str, 10);
        mpz_class d(std::string(den), 10);
        if (d == 0) {
            throw fail("zero denominator");
        }
        return Rational(n, d);
    }

    /// "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string to_string() const { return value_.get_str(10); }

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class &get_mpq() const noexcept { return value_; }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    Rational &operator+=(const Rational &o)
    {
        value_ += o.value_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        value_ -= o.value_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        value_ *= o.value_;
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero()) {
            throw division_by_zero("rational division by zero");
        }
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

private:
    mpq_class value_;
};

inline Rational pow(Rational base, long exponent)
{
    if (exponent < 0) {
        base = Rational(1) / base;
        exponent = -exponent;
    }
    Rational result(1);
    while (exponent > 0) {
        if (exponent & 1) {
            result *= base;
        }
        base *= base;
        exponent >>= 1;
    }
    return result;
}

} // namespace lagrange

#endif
