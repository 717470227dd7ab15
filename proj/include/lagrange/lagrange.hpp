#ifndef LAGRANGE_LAGRANGE_HPP
#define LAGRANGE_LAGRANGE_HPP

#include <lagrange/errors.hpp>
#include <lagrange/gessel.hpp>
#include <lagrange/identity.hpp>
#include <lagrange/puiseux.hpp>
#include <lagrange/rational.hpp>
#include <lagrange/series.hpp>
#include <lagrange/series_ops.hpp>
#include <lagrange/symmetric.hpp>

#endif
