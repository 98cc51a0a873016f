#pragma once

#include <complex>

#include <Eigen/Dense>

namespace ringcat {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

}  // namespace ringcat
