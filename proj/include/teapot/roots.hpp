#pragma once

// Root finding for integer polynomials: Aberth-Ehrlich simultaneous
// iteration in extended precision, validated by a backward-error residual.

#include <complex>
#include <optional>
#include <vector>

#include "teapot/polynomial.hpp"

namespace teapot {

struct RootSet {
  IntPolynomial polynomial;
  // Sorted by real part, then imaginary part; repeated roots appear repeatedly.
  std::vector<std::complex<double>> roots;
  // |p(root)| evaluated in extended precision.
  std::vector<double> residuals;
  // sum |c_i| |root|^i; every residual is at most tolerance * scale.
  std::vector<double> scales;
  // Root lies within 10 sqrt(tolerance) of another returned root.
  std::vector<bool> clustered;
  double tolerance = 0.0;
};

// Throws NonConvergence when the iteration does not settle or a root fails
// the residual test; std::invalid_argument for constant polynomials.
RootSet all_roots(const IntPolynomial& p, double tol = 1e-12);

// Largest real root in (1, 2], isolated exactly and rounded to double.
std::optional<double> leading_root(const IntPolynomial& p);

// Roots with modulus <= radius (a relative slack of 1e-9 keeps roots on the
// circle |z| = radius). Empty when radius <= 0.
std::vector<std::complex<double>> conjugates_in_disk(const IntPolynomial& p, double radius, double tol = 1e-12);

}  // namespace teapot
