#include "core/oracle.hpp"

#include <cmath>
#include <numbers>

#include "core/errors.hpp"
#include "core/rng.hpp"
#include "core/spectral.hpp"

namespace ipent::oracle {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector bloch_vector(double theta, double phi) {
  Vector v(2);
  v(0) = Complex(std::cos(theta / 2.0), 0.0);
  v(1) = std::exp(Complex(0.0, phi)) * std::sin(theta / 2.0);
  return v;
}

}  // namespace

double entropy_direct(const CoefficientMatrix& state, int which) {
  if (which != 1 && which != 2) {
    fail(ErrorCode::InvalidArgument, "entropy_direct: which must be 1 or 2");
  }
  const int d = state.dim();
  // Flatten |psi> row-major, then accumulate the partial trace entrywise.
  Vector psi(d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      psi(i * d + j) = state.entries()(i, j);
    }
  }
  Matrix rho = Matrix::Zero(d, d);
  if (which == 1) {
    for (int i = 0; i < d; ++i) {
      for (int k = 0; k < d; ++k) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j < d; ++j) {
          acc += psi(i * d + j) * std::conj(psi(k * d + j));
        }
        rho(i, k) = acc;
      }
    }
  } else {
    for (int j = 0; j < d; ++j) {
      for (int l = 0; l < d; ++l) {
        Complex acc(0.0, 0.0);
        for (int i = 0; i < d; ++i) {
          acc += psi(i * d + j) * std::conj(psi(i * d + l));
        }
        rho(j, l) = acc;
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  if (es.info() != Eigen::Success) {
    fail(ErrorCode::ConvergenceFailure, "entropy_direct: eigensolver failed");
  }
  double s = 0.0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const double lambda = es.eigenvalues()(k);
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

OverlapCheck overlap_theorem_check(const SingleParticleVector& phi,
                                   const SingleParticleVector& chi) {
  OverlapCheck out;
  out.overlap = std::abs(phi.entries().dot(chi.entries()));
  const CoefficientMatrix sym = symmetrize_product(phi, chi);
  const TakagiFactorization f = takagi(sym.entries());
  out.takagi_values = f.values;
  out.equal_pair = f.values.size() >= 2 &&
                   std::abs(f.values(0) - f.values(1)) <= 1e-10;
  return out;
}

double witness_grid_d2(const CoefficientMatrix& state, int polar, int azimuth) {
  if (state.dim() != 2) {
    fail(ErrorCode::InvalidArgument, "witness_grid_d2: state must have dim 2");
  }
  if (polar < 2 || azimuth < 2) {
    fail(ErrorCode::InvalidArgument, "witness_grid_d2: resolution too small");
  }
  const double pi = std::numbers::pi;
  double best = -1.0;
  double best_theta = 0.0;
  double best_phi = 0.0;
  for (int i = 0; i <= polar; ++i) {
    const double theta = pi * static_cast<double>(i) / polar;
    for (int j = 0; j < azimuth; ++j) {
      const double phi = 2.0 * pi * static_cast<double>(j) / azimuth;
      const double e = witness_expectation(state, bloch_vector(theta, phi));
      if (e > best) {
        best = e;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }
  // Local refinement around the best cell keeps the grid error below 1e-6
  // without raising the base resolution.
  double dt = pi / polar;
  double dp = 2.0 * pi / azimuth;
  for (int round = 0; round < 3; ++round) {
    const int steps = 16;
    const double t0 = best_theta;
    const double p0 = best_phi;
    for (int i = -steps; i <= steps; ++i) {
      const double theta = std::clamp(t0 + dt * i / steps, 0.0, pi);
      for (int j = -steps; j <= steps; ++j) {
        const double phi = p0 + dp * j / steps;
        const double e = witness_expectation(state, bloch_vector(theta, phi));
        if (e > best) {
          best = e;
          best_theta = theta;
          best_phi = phi;
        }
      }
    }
    dt /= steps;
    dp /= steps;
  }
  return best;
}

double witness_expectation_direct(const CoefficientMatrix& state,
                                  const Vector& v) {
  if (v.size() != state.dim()) {
    fail(ErrorCode::DimensionMismatch,
         "witness_expectation_direct: vector dimension mismatch");
  }
  if (std::abs(v.norm() - 1.0) > 1e-9) {
    fail(ErrorCode::NonUnitVector,
         "witness_expectation_direct: probe vector must have unit norm");
  }
  const int d = state.dim();
  const Matrix p = v * v.adjoint();
  const Matrix q = Matrix::Identity(d, d) - p;
  const Matrix ep = kron(p, q) + kron(q, p) + kron(p, p);
  Vector psi(d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      psi(i * d + j) = state.entries()(i, j);
    }
  }
  return (psi.adjoint() * ep * psi)(0, 0).real();
}

CoefficientMatrix random_state(SymmetryClass symmetry, int dim,
                               std::uint64_t seed) {
  if (dim < 2) {
    fail(ErrorCode::DimensionMismatch, "random_state: dimension must be >= 2");
  }
  SplitMix64 rng(seed);
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = rng.next_complex_gaussian();
    }
  }
  Matrix c;
  Matrix gt = g.transpose();
  switch (symmetry) {
    case SymmetryClass::Fermion: c = 0.5 * (g - gt); break;
    case SymmetryClass::Boson: c = 0.5 * (g + gt); break;
    case SymmetryClass::Distinguishable: c = g; break;
  }
  return CoefficientMatrix::from_coefficients(c, symmetry);
}

SingleParticleVector random_unit_vector(int dim, std::uint64_t seed) {
  if (dim < 1) {
    fail(ErrorCode::DimensionMismatch, "random_unit_vector: dimension must be >= 1");
  }
  SplitMix64 rng(seed);
  Vector v(dim);
  for (int k = 0; k < dim; ++k) v(k) = rng.next_complex_gaussian();
  return SingleParticleVector::from_entries(std::move(v));
}

Matrix random_unitary(int dim, std::uint64_t seed) {
  if (dim < 1) {
    fail(ErrorCode::DimensionMismatch, "random_unitary: dimension must be >= 1");
  }
  SplitMix64 rng(seed);
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = rng.next_complex_gaussian();
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  Matrix r = q.adjoint() * g;
  for (int k = 0; k < dim; ++k) {
    const Complex rkk = r(k, k);
    if (std::abs(rkk) > 0.0) q.col(k) *= rkk / std::abs(rkk);
  }
  return q;
}

int density_rank(const CoefficientMatrix& state) {
  const ReducedDensity rho = reduced_density(state, 1);
  // Eigenvalues of rho are squared coefficients, so exact zeros surface as
  // eigensolver noise around 1e-16; the cut sits above that floor. States
  // with coefficients close enough to the rank threshold to straddle this
  // cut are flagged near_threshold by the decomposition instead.
  constexpr double cut = 1e-13;
  int n = 0;
  for (Eigen::Index k = 0; k < rho.eigenvalues.size(); ++k) {
    if (rho.eigenvalues(k) > cut) ++n;
  }
  return n;
}

Verdict rederive_verdict(SymmetryClass symmetry, int rho_rank,
                         double entropy_bits) {
  switch (symmetry) {
    case SymmetryClass::Fermion:
      // The density rank is twice the Slater number.
      return rho_rank == 2 && entropy_bits <= 1.0 + tol::classify
                 ? Verdict::NonEntangledSlaterOne
                 : Verdict::Entangled;
    case SymmetryClass::Boson:
      if (rho_rank == 1) return Verdict::NonEntangledProduct;
      if (rho_rank == 2 && std::abs(entropy_bits - 1.0) <= tol::classify) {
        return Verdict::NonEntangledSymmetrizedOrthogonal;
      }
      return Verdict::Entangled;
    case SymmetryClass::Distinguishable:
      return rho_rank == 1 ? Verdict::NonEntangledFactorized
                           : Verdict::Entangled;
  }
  return Verdict::Entangled;
}

}  // namespace ipent::oracle
