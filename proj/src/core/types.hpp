#pragma once

#include <complex>

#include <Eigen/Dense>

namespace ipent {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Numerical tolerances used across the library. All are fixed; none are
// user-tunable at runtime.
namespace tol {

// Relative Frobenius gate for declared (anti)symmetry and hermiticity.
inline constexpr double sym = 1e-10;
// Orthonormality budget for factorization mode matrices.
inline constexpr double orth = 1e-10;
// Reconstruction budget for factorizations and decompositions.
inline constexpr double rec = 1e-10;
// Agreement budget between factorization values and singular values.
inline constexpr double val = 1e-10;
// A decomposition coefficient counts toward the rank above this threshold
// (absolute, on unit-norm states).
inline constexpr double rank_eps = 1e-9;
// Entropy comparisons against the exact anchors 0 and 1 during
// classification.
inline constexpr double classify = 1e-8;
// Allowed drift of the state normalization.
inline constexpr double norm = 1e-12;

}  // namespace tol

}  // namespace ipent
