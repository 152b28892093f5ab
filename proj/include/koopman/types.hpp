#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace koopman {

using Complex = std::complex<double>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat = Matrix<double>;    // points stored row-wise (N x dim)
using Vec = Vector<double>;
using CMat = Matrix<Complex>;
using CVec = Vector<Complex>;
using IVec = Vector<int>;

/// Which function space a point set or observable lives on.
enum class Domain { Original, Embedded };

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Caller passed data violating a documented precondition.
struct InputError : Error {
  using Error::Error;
};

/// Caller passed an internally inconsistent pair of arguments.
struct ContractViolation : Error {
  using Error::Error;
};

/// A solver failed to converge or the data is numerically degenerate.
struct NumericalError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace koopman
