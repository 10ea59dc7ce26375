#pragma once

#include <string_view>

#include "core/types.hpp"

namespace ipent {

// Exchange symmetry of a two-particle pure state. Fermion states require an
// antisymmetric coefficient matrix, boson states a symmetric one, and
// distinguishable particles carry no constraint.
enum class SymmetryClass { Fermion, Boson, Distinguishable };

const char* to_string(SymmetryClass s) noexcept;
SymmetryClass symmetry_from_string(std::string_view name);  // throws ParseError

// A normalized single-particle state vector.
class SingleParticleVector {
 public:
  // Normalizes the entries; rejects zero and non-finite input.
  static SingleParticleVector from_entries(Vector entries);

  int dim() const { return static_cast<int>(entries_.size()); }
  const Vector& entries() const { return entries_; }

 private:
  explicit SingleParticleVector(Vector entries) : entries_(std::move(entries)) {}
  Vector entries_;
};

// Coefficient matrix C of a two-particle pure state
// |psi> = sum_ij C_ij |i> (x) |j>, held at unit Frobenius norm together
// with its declared exchange symmetry. Immutable after construction; all
// operations on it are pure functions.
class CoefficientMatrix {
 public:
  // Validates the declared symmetry (relative residual <= tol::sym),
  // rejects zero/non-finite/undersized input, and rescales to unit
  // Frobenius norm. The global phase is left as given.
  static CoefficientMatrix from_coefficients(const Matrix& raw,
                                             SymmetryClass symmetry);

  int dim() const { return static_cast<int>(entries_.rows()); }
  SymmetryClass symmetry() const { return symmetry_; }
  const Matrix& entries() const { return entries_; }

 private:
  CoefficientMatrix(Matrix entries, SymmetryClass symmetry)
      : entries_(std::move(entries)), symmetry_(symmetry) {}
  Matrix entries_;
  SymmetryClass symmetry_;
};

// Relative residual against the class constraint (0 for Distinguishable).
double symmetry_residual(const Matrix& m, SymmetryClass symmetry);

// Fermion state (phi chi^T - chi phi^T)/2, normalized. Throws
// ParallelVectors when the antisymmetrization vanishes (the Pauli-forbidden
// case).
CoefficientMatrix antisymmetrize_product(const SingleParticleVector& phi,
                                         const SingleParticleVector& chi);

// Boson state (phi chi^T + chi phi^T)/2, normalized. Equal inputs yield the
// rank-one product state phi phi^T.
CoefficientMatrix symmetrize_product(const SingleParticleVector& phi,
                                     const SingleParticleVector& chi);

// Hilbert-Schmidt inner product sum_ij conj(A_ij) B_ij.
Complex inner_product(const CoefficientMatrix& a, const CoefficientMatrix& b);

// Fermion state assembled directly from pair coefficients: pair i couples
// basis states 2i-1 and 2i with amplitude a_i / sqrt(2). The list is
// normalized to sum a_i^2 = 1 and must fit into floor(dim/2) pairs.
CoefficientMatrix slater_form_state(int dim, const RealVector& coefficients);

// Boson state assembled directly from Schmidt coefficients on the diagonal.
CoefficientMatrix schmidt_form_state(int dim, const RealVector& coefficients);

}  // namespace ipent
