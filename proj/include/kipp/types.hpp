#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace kipp {

using Scalar = double;
using Complex = std::complex<Scalar>;

/// Dense square complex matrix; the universal input of the library.
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Default structural tolerance, scaled by max(1, |A|).
inline constexpr double kDefaultRelTol = 1e-9;

/// Base of every library error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define KIPP_DEFINE_ERROR(Name)                \
  class Name : public Error {                  \
   public:                                     \
    explicit Name(const std::string& what)     \
        : Error(std::string(#Name ": ") + what) {} \
  };

KIPP_DEFINE_ERROR(ConvergenceFailure)
KIPP_DEFINE_ERROR(NotSquare)
KIPP_DEFINE_ERROR(NonFiniteEntry)
KIPP_DEFINE_ERROR(NotPartialIsometry)
KIPP_DEFINE_ERROR(IllConditionedInterpolation)
KIPP_DEFINE_ERROR(NotUpperTriangular)
KIPP_DEFINE_ERROR(NotDim5)
KIPP_DEFINE_ERROR(NegativeMinorAxisSquared)
KIPP_DEFINE_ERROR(ParameterOutOfDisc)
KIPP_DEFINE_ERROR(InfeasibleMu)
KIPP_DEFINE_ERROR(BadDims)
KIPP_DEFINE_ERROR(MalformedInput)

#undef KIPP_DEFINE_ERROR

// Throws NotSquare / NonFiniteEntry when `a` is not a valid ComplexMatrix.
void require_valid(const ComplexMatrix& a);

}  // namespace kipp
