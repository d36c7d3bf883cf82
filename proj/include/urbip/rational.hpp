#pragma once

#include "urbip/error.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <string>
#include <string_view>

namespace urbip {

// GMP-backed rationals are kept in lowest terms with a positive denominator
// after every operation. Expression templates are disabled so the type
// composes with Eigen's own expression machinery.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Parses "a" or "a/b" (optional leading '-' on a, b > 0). Throws ParseError.
Rational parseRational(std::string_view text);

/// Canonical text form: "a" for integers, otherwise "a/b" in lowest terms.
std::string toString(const Rational& value);

inline double toDouble(const Rational& value) { return value.convert_to<double>(); }

inline Eigen::MatrixXd toDouble(const MatrixQ& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = toDouble(m(i, j));
  return out;
}

inline Eigen::VectorXd toDouble(const VectorQ& v) {
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = toDouble(v(i));
  return out;
}

inline int sign(const Rational& value) { return value.sign(); }

}  // namespace urbip
