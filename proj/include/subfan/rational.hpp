#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace subfan {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Mat<Rational>;
using RationalVector = Vec<Rational>;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
// Accepts "p", "p/q" and finite decimals such as "-0.25".
Rational parse_rational(std::string_view text);

Integer numerator_of(const Rational& q);
Integer denominator_of(const Rational& q);
int sgn(const Rational& q);

}  // namespace subfan
