#pragma once

// Wide scalar used wherever the moment problem needs more than double
// precision (moments, Cauchy inverses, expansion sums). 100 decimal digits
// keeps a 41-term Cauchy solve with exact moments well above double accuracy.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace fixinv {

inline constexpr unsigned kExtendedDigits = 100;

using Extended = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<kExtendedDigits, boost::multiprecision::allocate_stack>,
    boost::multiprecision::et_off>;

Extended tgamma_ext(const Extended& x);

inline Extended pi_ext() {
  return boost::math::constants::pi<Extended>();
}

}  // namespace fixinv
