#pragma once

#include <stdexcept>
#include <string>

namespace relqm {

/// Solver or quadrature failed to reach its tolerance. CLI exit code 2.
class convergence_error : public std::runtime_error {
public:
  explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

/// Sampling grid does not cover enough of the density (boundary above 1e-8 of peak).
class coverage_error : public std::runtime_error {
public:
  explicit coverage_error(const std::string& what) : std::runtime_error(what) {}
};

/// Grid too coarse for the finite-difference operators applied to it.
class grid_error : public std::runtime_error {
public:
  explicit grid_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace relqm
