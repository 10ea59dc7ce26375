#include "core/state.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace ipent {

const char* to_string(SymmetryClass s) noexcept {
  switch (s) {
    case SymmetryClass::Fermion: return "fermion";
    case SymmetryClass::Boson: return "boson";
    case SymmetryClass::Distinguishable: return "distinguishable";
  }
  return "unknown";
}

SymmetryClass symmetry_from_string(std::string_view name) {
  if (name == "fermion") return SymmetryClass::Fermion;
  if (name == "boson") return SymmetryClass::Boson;
  if (name == "distinguishable") return SymmetryClass::Distinguishable;
  fail(ErrorCode::ParseError,
       "unknown symmetry class '" + std::string(name) +
           "' (expected fermion, boson or distinguishable)");
}

double symmetry_residual(const Matrix& m, SymmetryClass symmetry) {
  const double n = m.norm();
  if (n <= 0.0) return 0.0;
  Matrix t = m.transpose();
  switch (symmetry) {
    case SymmetryClass::Fermion: return (m + t).norm() / n;
    case SymmetryClass::Boson: return (m - t).norm() / n;
    case SymmetryClass::Distinguishable: return 0.0;
  }
  return 0.0;
}

SingleParticleVector SingleParticleVector::from_entries(Vector entries) {
  if (entries.size() < 1) {
    fail(ErrorCode::DimensionMismatch, "single-particle vector must be nonempty");
  }
  if (!entries.allFinite()) {
    fail(ErrorCode::InvalidArgument, "single-particle vector has non-finite entries");
  }
  const double n = entries.norm();
  if (n <= 0.0) {
    fail(ErrorCode::ZeroState, "single-particle vector is zero");
  }
  entries /= n;
  return SingleParticleVector(std::move(entries));
}

CoefficientMatrix CoefficientMatrix::from_coefficients(const Matrix& raw,
                                                       SymmetryClass symmetry) {
  if (raw.rows() != raw.cols()) {
    fail(ErrorCode::DimensionMismatch, "coefficient matrix must be square");
  }
  if (raw.rows() < 2) {
    fail(ErrorCode::DimensionMismatch,
         "single-particle dimension must be at least 2");
  }
  if (!raw.allFinite()) {
    fail(ErrorCode::InvalidArgument, "coefficient matrix has non-finite entries");
  }
  const double n = raw.norm();
  if (n <= 0.0) {
    fail(ErrorCode::ZeroState, "coefficient matrix is zero");
  }
  const double residual = symmetry_residual(raw, symmetry);
  if (residual > tol::sym) {
    fail(ErrorCode::SymmetryViolation,
         std::string("declared ") + to_string(symmetry) +
             " state violates its symmetry (relative residual " +
             std::to_string(residual) + ")");
  }
  // Already-normalized input is kept bit for bit so that file round trips
  // are exact; the norm invariant allows 1e-12 of drift.
  if (std::abs(n - 1.0) <= tol::norm) {
    return CoefficientMatrix(raw, symmetry);
  }
  return CoefficientMatrix(raw / n, symmetry);
}

CoefficientMatrix antisymmetrize_product(const SingleParticleVector& phi,
                                         const SingleParticleVector& chi) {
  if (phi.dim() != chi.dim()) {
    fail(ErrorCode::DimensionMismatch, "antisymmetrize_product: dimensions differ");
  }
  const Vector& f = phi.entries();
  const Vector& g = chi.entries();
  Matrix c = 0.5 * (f * g.transpose() - g * f.transpose());
  // ||c|| = sqrt((1 - |<phi|chi>|^2) / 2) for unit inputs; it vanishes
  // exactly when the vectors are parallel.
  if (c.norm() <= 1e-12) {
    fail(ErrorCode::ParallelVectors,
         "antisymmetrization of (near-)parallel vectors vanishes");
  }
  return CoefficientMatrix::from_coefficients(c, SymmetryClass::Fermion);
}

CoefficientMatrix symmetrize_product(const SingleParticleVector& phi,
                                     const SingleParticleVector& chi) {
  if (phi.dim() != chi.dim()) {
    fail(ErrorCode::DimensionMismatch, "symmetrize_product: dimensions differ");
  }
  const Vector& f = phi.entries();
  const Vector& g = chi.entries();
  Matrix c = 0.5 * (f * g.transpose() + g * f.transpose());
  return CoefficientMatrix::from_coefficients(c, SymmetryClass::Boson);
}

Complex inner_product(const CoefficientMatrix& a, const CoefficientMatrix& b) {
  if (a.dim() != b.dim()) {
    fail(ErrorCode::DimensionMismatch, "inner_product: dimensions differ");
  }
  return (a.entries().conjugate().cwiseProduct(b.entries())).sum();
}

CoefficientMatrix slater_form_state(int dim, const RealVector& coefficients) {
  if (dim < 2) {
    fail(ErrorCode::DimensionMismatch, "slater_form_state: dimension must be >= 2");
  }
  if (coefficients.size() < 1 || coefficients.size() > dim / 2) {
    fail(ErrorCode::InvalidArgument,
         "slater_form_state: need between 1 and floor(dim/2) coefficients");
  }
  const double n = coefficients.norm();
  if (n <= 0.0) {
    fail(ErrorCode::ZeroState, "slater_form_state: all coefficients are zero");
  }
  Matrix c = Matrix::Zero(dim, dim);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (Eigen::Index k = 0; k < coefficients.size(); ++k) {
    const double a = std::abs(coefficients(k)) / n * inv_sqrt2;
    c(2 * k, 2 * k + 1) = Complex(a, 0.0);
    c(2 * k + 1, 2 * k) = Complex(-a, 0.0);
  }
  return CoefficientMatrix::from_coefficients(c, SymmetryClass::Fermion);
}

CoefficientMatrix schmidt_form_state(int dim, const RealVector& coefficients) {
  if (dim < 2) {
    fail(ErrorCode::DimensionMismatch, "schmidt_form_state: dimension must be >= 2");
  }
  if (coefficients.size() < 1 || coefficients.size() > dim) {
    fail(ErrorCode::InvalidArgument,
         "schmidt_form_state: need between 1 and dim coefficients");
  }
  const double n = coefficients.norm();
  if (n <= 0.0) {
    fail(ErrorCode::ZeroState, "schmidt_form_state: all coefficients are zero");
  }
  Matrix c = Matrix::Zero(dim, dim);
  for (Eigen::Index k = 0; k < coefficients.size(); ++k) {
    c(k, k) = Complex(std::abs(coefficients(k)) / n, 0.0);
  }
  return CoefficientMatrix::from_coefficients(c, SymmetryClass::Boson);
}

}  // namespace ipent
