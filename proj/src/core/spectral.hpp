#pragma once

#include "core/types.hpp"

namespace ipent {

// Dense numerical kernels for the decompositions used throughout the
// library: Hermitian eigendecomposition, SVD, the Takagi factorization of
// complex symmetric matrices and the Youla canonical form of complex
// antisymmetric matrices.
//
// All outputs are deterministic for a given input: values are sorted
// descending and mode phases are canonicalized (the first significant
// component of each mode is made real positive where the factorization
// permits a free phase; Takagi modes only carry a sign freedom because
// their phases enter squared, and Youla modes carry one phase per pair).

struct HermitianEigResult {
  RealVector eigenvalues;  // descending
  Matrix eigenvectors;     // orthonormal columns, phase-canonical
};

// Eigendecomposition of a Hermitian matrix. The input must satisfy
// ||H - H^dag||_F <= tol::sym * ||H||_F.
HermitianEigResult hermitian_eig(const Matrix& h);

struct SvdResult {
  Matrix left;                 // U
  RealVector singular_values;  // descending
  Matrix right;                // V, so that M = U * diag(s) * V^dag
};

SvdResult svd(const Matrix& m);

struct TakagiFactorization {
  Matrix modes;       // unitary U
  RealVector values;  // nonnegative, descending; U * diag(values) * U^T = C
};

// Takagi factorization C = U diag(v) U^T of a complex symmetric matrix.
// The values coincide with the singular values of C.
TakagiFactorization takagi(const Matrix& c);

struct YoulaFactorization {
  Matrix modes;             // unitary U, columns paired (2i-1, 2i)
  RealVector block_values;  // floor(d/2) nonnegative values, descending
};

// Youla canonical form C = U J U^T of a complex antisymmetric matrix,
// where J is block diagonal with 2x2 blocks [[0, v_i], [-v_i, 0]] and a
// trailing zero row/column when the dimension is odd. The singular values
// of C are the block values, each repeated twice.
YoulaFactorization youla(const Matrix& c);

// J matrix of a Youla factorization, for reconstruction.
Matrix youla_block_matrix(int dim, const RealVector& block_values);

Matrix takagi_reconstruct(const TakagiFactorization& f);
Matrix youla_reconstruct(const YoulaFactorization& f);

// Relative deviation from (skew-)symmetry: ||m -+ m^T||_F / ||m||_F.
double symmetric_residual(const Matrix& m);
double antisymmetric_residual(const Matrix& m);

}  // namespace ipent
