#ifndef LAGRANGE_ERRORS_HPP
#define LAGRANGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lagrange
{

// A coefficient was requested at or beyond the tracked absolute precision
// of a truncated series. Callers planned too small a working order.
class precision_exceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Inversion of a series that is zero to its precision, or division of a
// rational by zero.
class division_by_zero : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// An input outside the domain of an operation: log/pow of a series with
// constant term != 1, exp of a series with nonzero constant term,
// composition with a series that has a nonzero constant term, r_0 = 0.
class series_domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// A result that must hold for mathematical reasons does not. Signals a bug.
class internal_consistency_error : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

// Malformed rational literal.
class parse_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace lagrange

#endif
