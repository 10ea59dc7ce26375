#include "core/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace ipent {

namespace {

double entropy_bits(const RealVector& eigenvalues) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
    const double lambda = eigenvalues(k);
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

Verdict rank_led_verdict(SymmetryClass symmetry, int rank, double entropy) {
  switch (symmetry) {
    case SymmetryClass::Fermion:
      return rank == 1 ? Verdict::NonEntangledSlaterOne : Verdict::Entangled;
    case SymmetryClass::Boson:
      if (rank == 1) return Verdict::NonEntangledProduct;
      if (rank == 2 && std::abs(entropy - 1.0) <= tol::classify) {
        return Verdict::NonEntangledSymmetrizedOrthogonal;
      }
      return Verdict::Entangled;
    case SymmetryClass::Distinguishable:
      return rank == 1 ? Verdict::NonEntangledFactorized : Verdict::Entangled;
  }
  return Verdict::Entangled;
}

bool entropy_led_non_entangled(SymmetryClass symmetry, int rank,
                               double entropy) {
  switch (symmetry) {
    case SymmetryClass::Fermion:
      // S = 1 exactly for a single Slater determinant, strictly above 1
      // otherwise; roundoff can land marginally below 1.
      return entropy <= 1.0 + tol::classify;
    case SymmetryClass::Boson:
      return entropy <= tol::classify ||
             (std::abs(entropy - 1.0) <= tol::classify && rank == 2);
    case SymmetryClass::Distinguishable:
      return entropy <= tol::classify;
  }
  return false;
}

}  // namespace

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::NonEntangledProduct: return "non-entangled-product";
    case Verdict::NonEntangledSymmetrizedOrthogonal:
      return "non-entangled-symmetrized-orthogonal";
    case Verdict::NonEntangledSlaterOne: return "non-entangled-slater-one";
    case Verdict::NonEntangledFactorized: return "non-entangled-factorized";
    case Verdict::Entangled: return "entangled";
  }
  return "unknown";
}

bool is_entangled(Verdict v) noexcept { return v == Verdict::Entangled; }

ReducedDensity reduced_density(const CoefficientMatrix& state, int which) {
  if (which != 1 && which != 2) {
    fail(ErrorCode::InvalidArgument, "reduced_density: which must be 1 or 2");
  }
  const Matrix& c = state.entries();
  ReducedDensity out;
  if (which == 1) {
    out.matrix = c * c.adjoint();
  } else {
    out.matrix = c.transpose() * c.conjugate();
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(out.matrix);
  if (es.info() != Eigen::Success) {
    fail(ErrorCode::ConvergenceFailure, "reduced_density: eigensolver failed");
  }
  out.eigenvalues = es.eigenvalues().reverse();
  return out;
}

double von_neumann_entropy(const ReducedDensity& rho) {
  return entropy_bits(rho.eigenvalues);
}

Classification classify(const CoefficientMatrix& state) {
  const DecompositionResult dec = decompose(state);
  const ReducedDensity rho = reduced_density(state, 1);
  const double s = von_neumann_entropy(rho);
  const int rank = dec.effective_rank;

  const Verdict by_rank = rank_led_verdict(state.symmetry(), rank, s);
  const bool rank_non_entangled = !is_entangled(by_rank);
  const bool entropy_non_entangled =
      entropy_led_non_entangled(state.symmetry(), rank, s);
  if (rank_non_entangled != entropy_non_entangled) {
    fail(ErrorCode::ClassificationConflict,
         std::string("rank-led and entropy-led classifications disagree (") +
             to_string(state.symmetry()) + ", rank " + std::to_string(rank) +
             ", entropy " + std::to_string(s) +
             "); the state sits on a numerical threshold");
  }

  Classification out;
  out.verdict = by_rank;
  out.rank_count = rank;
  out.entropy_bits = s;
  return out;
}

double witness_expectation(const CoefficientMatrix& state, const Vector& v) {
  if (v.size() != state.dim()) {
    fail(ErrorCode::DimensionMismatch,
         "witness_expectation: vector dimension mismatch");
  }
  if (std::abs(v.norm() - 1.0) > 1e-9) {
    fail(ErrorCode::NonUnitVector,
         "witness_expectation: probe vector must have unit norm");
  }
  const Eigen::Index d = state.dim();
  const Matrix q = Matrix::Identity(d, d) - v * v.adjoint();
  const Matrix rest = q * state.entries() * q.transpose();
  const double e = 1.0 - rest.squaredNorm();
  return std::clamp(e, 0.0, 1.0);
}

namespace {

// Closed-form probe candidates read off the decomposition. The first mode
// of the top Slater pair is optimal for fermions; for bosons the mix
// sqrt(b1/(b1+b2)) m0 + i sqrt(b2/(b1+b2)) m1 maximizes the expectation at
// b1^2 + b2^2 (it reduces to m0 for rank one).
void decomposition_candidates(const CoefficientMatrix& state,
                              std::vector<Vector>& out) {
  const DecompositionResult dec = decompose(state);
  out.push_back(dec.modes.col(0).normalized());
  switch (state.symmetry()) {
    case SymmetryClass::Boson: {
      if (dec.coefficients.size() >= 2) {
        const double b1 = dec.coefficients(0);
        const double b2 = dec.coefficients(1);
        if (b1 + b2 > 0.0) {
          Vector v = std::sqrt(b1 / (b1 + b2)) * dec.modes.col(0) +
                     Complex(0.0, 1.0) * std::sqrt(b2 / (b1 + b2)) *
                         dec.modes.col(1);
          out.push_back(v.normalized());
        }
      }
      break;
    }
    case SymmetryClass::Distinguishable:
      out.push_back(dec.right_modes.col(0).normalized());
      break;
    case SymmetryClass::Fermion:
      break;
  }
}

}  // namespace

WitnessReport witness_search(const CoefficientMatrix& state,
                             std::uint64_t seed, int restarts, int max_iters) {
  if (restarts < 0 || max_iters < 1) {
    fail(ErrorCode::InvalidArgument,
         "witness_search: restarts must be >= 0 and max_iters >= 1");
  }
  const Eigen::Index d = state.dim();
  const Matrix& c = state.entries();
  const Matrix rho1 = c * c.adjoint();
  const Matrix rho2 = c.transpose() * c.conjugate();
  const Matrix rho_sum = rho1 + rho2;

  WitnessReport best;
  best.expectation = -1.0;
  best.restarts_used = restarts;

  auto consider = [&](const Vector& v, int iterations) {
    const double e = witness_expectation(state, v);
    if (e > best.expectation) {
      best.expectation = e;
      best.vector = v;
      best.iterations = iterations;
    }
  };

  std::vector<Vector> candidates;
  decomposition_candidates(state, candidates);
  for (const Vector& v : candidates) consider(v, 0);

  SplitMix64 rng(seed);
  for (int r = 0; r < restarts; ++r) {
    Vector v(d);
    for (Eigen::Index k = 0; k < d; ++k) v(k) = rng.next_complex_gaussian();
    v.normalize();
    double e = witness_expectation(state, v);
    int used = 0;
    for (int it = 0; it < max_iters; ++it) {
      const Vector w = c * v.conjugate();
      const Matrix m = rho_sum - w * w.adjoint();
      Eigen::SelfAdjointEigenSolver<Matrix> es(m);
      if (es.info() != Eigen::Success) break;
      Vector v_next = es.eigenvectors().col(d - 1);  // top eigenvector
      v_next.normalize();
      const double e_next = witness_expectation(state, v_next);
      ++used;
      if (e_next > e + 1e-12) {
        v = std::move(v_next);
        e = e_next;
      } else {
        if (e_next > e) {
          v = std::move(v_next);
          e = e_next;
        }
        break;
      }
    }
    consider(v, used);
  }
  return best;
}

}  // namespace ipent
