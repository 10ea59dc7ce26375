#include "core/decomposition.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace ipent {

namespace {

int count_above(const RealVector& values, double threshold) {
  int n = 0;
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    if (values(k) > threshold) ++n;
  }
  return n;
}

bool any_near_threshold(const RealVector& values) {
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    if (values(k) >= tol::rank_eps / 10.0 && values(k) <= 10.0 * tol::rank_eps) {
      return true;
    }
  }
  return false;
}

}  // namespace

const char* to_string(DecompositionKind k) noexcept {
  switch (k) {
    case DecompositionKind::Slater: return "slater";
    case DecompositionKind::SchmidtBoson: return "schmidt-boson";
    case DecompositionKind::SchmidtDistinguishable:
      return "schmidt-distinguishable";
  }
  return "unknown";
}

DecompositionResult slater_decompose(const CoefficientMatrix& state) {
  if (state.symmetry() != SymmetryClass::Fermion) {
    fail(ErrorCode::InvalidArgument,
         "slater_decompose requires a fermion state");
  }
  const YoulaFactorization f = youla(state.entries());
  DecompositionResult out;
  out.kind = DecompositionKind::Slater;
  out.modes = f.modes;
  out.coefficients = std::sqrt(2.0) * f.block_values;
  out.effective_rank = count_above(out.coefficients, tol::rank_eps);
  out.near_threshold = any_near_threshold(out.coefficients);
  return out;
}

DecompositionResult schmidt_decompose_boson(const CoefficientMatrix& state) {
  if (state.symmetry() != SymmetryClass::Boson) {
    fail(ErrorCode::InvalidArgument,
         "schmidt_decompose_boson requires a boson state");
  }
  const TakagiFactorization f = takagi(state.entries());
  DecompositionResult out;
  out.kind = DecompositionKind::SchmidtBoson;
  out.modes = f.modes;
  out.coefficients = f.values;
  out.effective_rank = count_above(out.coefficients, tol::rank_eps);
  out.near_threshold = any_near_threshold(out.coefficients);
  return out;
}

DecompositionResult schmidt_decompose_general(const CoefficientMatrix& state) {
  const SvdResult f = svd(state.entries());
  DecompositionResult out;
  out.kind = DecompositionKind::SchmidtDistinguishable;
  out.modes = f.left;
  // C = sum_k s_k u_k v_k^dag, so the second-particle modes in
  // |psi> = sum_k s_k |u_k> (x) |w_k> are w_k = conj(v_k).
  out.right_modes = f.right.conjugate();
  out.coefficients = f.singular_values;
  out.effective_rank = count_above(out.coefficients, tol::rank_eps);
  out.near_threshold = any_near_threshold(out.coefficients);
  return out;
}

DecompositionResult decompose(const CoefficientMatrix& state) {
  switch (state.symmetry()) {
    case SymmetryClass::Fermion: return slater_decompose(state);
    case SymmetryClass::Boson: return schmidt_decompose_boson(state);
    case SymmetryClass::Distinguishable:
      return schmidt_decompose_general(state);
  }
  fail(ErrorCode::InvalidArgument, "decompose: unknown symmetry class");
}

Matrix reconstruct(const DecompositionResult& result) {
  const Eigen::Index d = result.modes.rows();
  Matrix c = Matrix::Zero(d, d);
  switch (result.kind) {
    case DecompositionKind::Slater: {
      const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
      for (Eigen::Index k = 0; k < result.coefficients.size(); ++k) {
        if (2 * k + 1 >= d) break;
        const Vector u = result.modes.col(2 * k);
        const Vector w = result.modes.col(2 * k + 1);
        c += (result.coefficients(k) * inv_sqrt2) *
             (u * w.transpose() - w * u.transpose());
      }
      break;
    }
    case DecompositionKind::SchmidtBoson: {
      for (Eigen::Index k = 0; k < result.coefficients.size(); ++k) {
        const Vector u = result.modes.col(k);
        c += result.coefficients(k) * (u * u.transpose());
      }
      break;
    }
    case DecompositionKind::SchmidtDistinguishable: {
      for (Eigen::Index k = 0; k < result.coefficients.size(); ++k) {
        const Vector u = result.modes.col(k);
        const Vector w = result.right_modes.col(k);
        c += result.coefficients(k) * (u * w.transpose());
      }
      break;
    }
  }
  return c;
}

double reconstruction_residual(const CoefficientMatrix& state,
                               const DecompositionResult& result) {
  return (state.entries() - reconstruct(result)).norm();
}

}  // namespace ipent
