#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace blockrat {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Invalid argument values or inconsistent problem parameters.
class ParameterError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A caller violated a documented precondition (e.g. mismatched dimensions).
class ContractError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// A dense kernel failed to converge or produced an unusable result.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A rational model could not be evaluated at the requested point.
class EvaluationError : public std::runtime_error {
  public:
    EvaluationError(const std::string& what, Complex z) : std::runtime_error(what), point_(z) {}

    Complex point() const noexcept { return point_; }

  private:
    Complex point_;
};

std::string to_string(Complex z);

} // namespace blockrat
