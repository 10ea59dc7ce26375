#pragma once

#include <cmath>

#include "core/decomposition.hpp"
#include "core/entanglement.hpp"
#include "core/oracle.hpp"
#include "core/spectral.hpp"
#include "core/state.hpp"

namespace ipent::testing {

inline Matrix singlet_matrix() {
  Matrix c(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  c << Complex(0, 0), Complex(s, 0), Complex(-s, 0), Complex(0, 0);
  return c;
}

inline CoefficientMatrix singlet() {
  return CoefficientMatrix::from_coefficients(singlet_matrix(),
                                              SymmetryClass::Fermion);
}

inline Vector unit(int dim, int k) {
  Vector v = Vector::Zero(dim);
  v(k) = Complex(1.0, 0.0);
  return v;
}

inline SingleParticleVector basis_vector(int dim, int k) {
  return SingleParticleVector::from_entries(unit(dim, k));
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Distance up to a global phase, minimized analytically.
inline double phase_free_distance(const Matrix& a, const Matrix& b) {
  const Complex overlap = (a.conjugate().cwiseProduct(b)).sum();
  const Complex phase = std::abs(overlap) > 0.0
                            ? overlap / std::abs(overlap)
                            : Complex(1.0, 0.0);
  return (a * phase - b).norm();
}

inline double orthonormality_residual(const Matrix& u) {
  return (u.adjoint() * u - Matrix::Identity(u.cols(), u.cols())).norm();
}

// Fermion state in explicit paired form with the given normalized
// coefficients; independent of the library's slater_form_state builder.
inline Matrix slater_form_matrix(int dim, const RealVector& a) {
  Matrix c = Matrix::Zero(dim, dim);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    c(2 * k, 2 * k + 1) = Complex(a(k) * inv_sqrt2, 0.0);
    c(2 * k + 1, 2 * k) = Complex(-a(k) * inv_sqrt2, 0.0);
  }
  return c;
}

}  // namespace ipent::testing
