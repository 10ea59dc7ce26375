#pragma once

#include "core/spectral.hpp"
#include "core/state.hpp"

namespace ipent {

enum class DecompositionKind { Slater, SchmidtBoson, SchmidtDistinguishable };

const char* to_string(DecompositionKind k) noexcept;

// Canonical decomposition of a two-particle state. Coefficients are
// reported as nonnegative reals sorted descending, with any phases absorbed
// into the modes, and sum to one in squares. effective_rank counts the
// coefficients above tol::rank_eps (the Slater or Schmidt number);
// near_threshold flags coefficients within a decade of that threshold,
// where rank decisions are numerically fragile.
struct DecompositionResult {
  DecompositionKind kind;
  Matrix modes;             // orthonormal columns
  Matrix right_modes;       // second-particle modes; only for the SVD route
  RealVector coefficients;  // descending, sum of squares = 1
  int effective_rank = 0;
  bool near_threshold = false;
};

// Fermion pair decomposition into elementary Slater determinants over
// paired modes: coefficient i couples modes 2i-1 and 2i with weight
// a_i / sqrt(2). a_i = sqrt(2) * (Youla block value).
DecompositionResult slater_decompose(const CoefficientMatrix& state);

// Boson Schmidt decomposition via the Takagi factorization: same mode for
// both particles, b_i = Takagi value.
DecompositionResult schmidt_decompose_boson(const CoefficientMatrix& state);

// Ordinary SVD Schmidt decomposition for distinguishable particles (also
// usable as the flattened view of a symmetric or antisymmetric state).
DecompositionResult schmidt_decompose_general(const CoefficientMatrix& state);

// Dispatch on the state's symmetry class.
DecompositionResult decompose(const CoefficientMatrix& state);

// Inverse map: rebuilds the coefficient matrix from modes + coefficients.
Matrix reconstruct(const DecompositionResult& result);

// Frobenius distance between the state and its reconstruction.
double reconstruction_residual(const CoefficientMatrix& state,
                               const DecompositionResult& result);

}  // namespace ipent
