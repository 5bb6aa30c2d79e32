#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace slocc4 {

using Complex = std::complex<double>;

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Mat8 = Eigen::Matrix<Complex, 8, 8>;
using RealMat4 = Eigen::Matrix4d;
using Vec8 = Eigen::Matrix<Complex, 8, 1>;
using Vec16 = Eigen::Matrix<Complex, 16, 1>;
using MatX = Eigen::MatrixXcd;

inline constexpr Complex kI{0.0, 1.0};

// Error taxonomy. Every failure the library reports derives from Error so the
// CLI can map categories onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class InvalidDensity : public Error {
 public:
  using Error::Error;
};

// Raised when a local filter would have to invert a (numerically) rank-1
// reduced density operator.
class SingularFilter : public Error {
 public:
  using Error::Error;
};

class AmbiguousClassification : public Error {
 public:
  using Error::Error;
};

// Malformed state or report document; the message names the offending
// position or count.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace slocc4
