#include "core/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "core/errors.hpp"

namespace ipent {

namespace {

constexpr int kSweepsPerDim = 100;  // iteration cap: 100 * d sweeps

void require_square_finite(const Matrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    fail(ErrorCode::DimensionMismatch,
         std::string(who) + ": input must be a nonempty square matrix");
  }
  if (!m.allFinite()) {
    fail(ErrorCode::InvalidArgument,
         std::string(who) + ": input has non-finite entries");
  }
}

Matrix symmetric_part(const Matrix& m) {
  Matrix t = m.transpose();
  return 0.5 * (m + t);
}

Matrix antisymmetric_part(const Matrix& m) {
  Matrix t = m.transpose();
  return 0.5 * (m - t);
}

// Phase of the first significant component, or 1 for an all-zero vector.
Complex leading_phase(const Vector& v) {
  const double m = v.cwiseAbs().maxCoeff();
  if (m <= 0.0) return Complex(1.0, 0.0);
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    if (std::abs(v(j)) > 1e-8 * m) {
      return v(j) / std::abs(v(j));
    }
  }
  return Complex(1.0, 0.0);
}

// Rotate each column so its first significant component is real positive.
void canonicalize_phases(Matrix& u) {
  for (Eigen::Index k = 0; k < u.cols(); ++k) {
    Vector col = u.col(k);
    u.col(k) = col / leading_phase(col);
  }
}

// Takagi modes may only be flipped in sign (phases enter squared), so the
// canonical choice makes the first significant component's real part
// positive, falling back to the imaginary part on the cut.
void canonicalize_signs(Matrix& u) {
  for (Eigen::Index k = 0; k < u.cols(); ++k) {
    const Vector& col = u.col(k);
    const double m = col.cwiseAbs().maxCoeff();
    if (m <= 0.0) continue;
    for (Eigen::Index j = 0; j < col.size(); ++j) {
      const Complex z = col(j);
      if (std::abs(z) > 1e-8 * m) {
        const bool flip = z.real() < -1e-12 * std::abs(z) ||
                          (std::abs(z.real()) <= 1e-12 * std::abs(z) &&
                           z.imag() < 0.0);
        if (flip) u.col(k) = -col;
        break;
      }
    }
  }
}

double offdiag_norm(const RealMatrix& r, const RealMatrix& t) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    for (Eigen::Index j = 0; j < r.cols(); ++j) {
      if (i == j) continue;
      s += r(i, j) * r(i, j) + t(i, j) * t(i, j);
    }
  }
  return std::sqrt(s);
}

void apply_congruence(RealMatrix& m, int p, int q, double c, double s) {
  const Eigen::Index n = m.rows();
  for (Eigen::Index k = 0; k < n; ++k) {  // M <- M J
    const double mp = m(k, p);
    const double mq = m(k, q);
    m(k, p) = c * mp + s * mq;
    m(k, q) = -s * mp + c * mq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {  // M <- J^T M
    const double mp = m(p, k);
    const double mq = m(q, k);
    m(p, k) = c * mp + s * mq;
    m(q, k) = -s * mp + c * mq;
  }
}

// Joint Jacobi diagonalization of a commuting pair of real symmetric
// matrices. Each rotation angle comes from the principal axis of the 2x2
// Gram matrix of the pair's (M_pp - M_qq, 2 M_pq) vectors, which is the
// angle minimizing the combined off-diagonal mass. Returns the accumulated
// orthogonal matrix; throws ConvergenceFailure if the sweep cap is reached
// with the off-diagonal mass still above the accepted floor.
RealMatrix joint_jacobi(RealMatrix& r, RealMatrix& t, int max_sweeps) {
  const Eigen::Index n = r.rows();
  RealMatrix o = RealMatrix::Identity(n, n);
  const double scale = std::sqrt(r.squaredNorm() + t.squaredNorm());
  if (scale <= 0.0) return o;
  const double target = 1e-13 * scale;
  const double accept = 1e-11 * scale;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (offdiag_norm(r, t) <= target) return o;
    bool rotated = false;
    for (int p = 0; p + 1 < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(r(p, q)) + std::abs(t(p, q)) <= 1e-18 * scale) continue;
        const double hr1 = r(p, p) - r(q, q), hr2 = 2.0 * r(p, q);
        const double ht1 = t(p, p) - t(q, q), ht2 = 2.0 * t(p, q);
        const double g11 = hr1 * hr1 + ht1 * ht1;
        const double g22 = hr2 * hr2 + ht2 * ht2;
        const double g12 = hr1 * hr2 + ht1 * ht2;
        const double phi = 0.5 * std::atan2(2.0 * g12, g11 - g22);
        double ux = std::cos(phi);
        double uy = std::sin(phi);
        if (ux < 0.0) {
          ux = -ux;
          uy = -uy;
        }
        const double theta = 0.5 * std::atan2(uy, ux);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        if (std::abs(s) <= 1e-18) continue;
        apply_congruence(r, p, q, c, s);
        apply_congruence(t, p, q, c, s);
        for (Eigen::Index k = 0; k < n; ++k) {  // O <- O J
          const double op = o(k, p);
          const double oq = o(k, q);
          o(k, p) = c * op + s * oq;
          o(k, q) = -s * op + c * oq;
        }
        rotated = true;
      }
    }
    if (!rotated) break;
  }
  if (offdiag_norm(r, t) > accept) {
    fail(ErrorCode::ConvergenceFailure,
         "joint diagonalization did not converge within the sweep cap");
  }
  return o;
}

// Sort columns of u (and the matching values) by value descending; stable.
void sort_by_value(Matrix& u, RealVector& values) {
  std::vector<Eigen::Index> idx(values.size());
  std::iota(idx.begin(), idx.end(), Eigen::Index{0});
  std::stable_sort(idx.begin(), idx.end(), [&](Eigen::Index a, Eigen::Index b) {
    return values(a) > values(b);
  });
  Matrix us = u;
  RealVector vs = values;
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    u.col(k) = us.col(idx[k]);
    values(k) = vs(idx[k]);
  }
}

}  // namespace

double symmetric_residual(const Matrix& m) {
  const double n = m.norm();
  if (n <= 0.0) return 0.0;
  Matrix t = m.transpose();
  return (m - t).norm() / n;
}

double antisymmetric_residual(const Matrix& m) {
  const double n = m.norm();
  if (n <= 0.0) return 0.0;
  Matrix t = m.transpose();
  return (m + t).norm() / n;
}

HermitianEigResult hermitian_eig(const Matrix& h) {
  require_square_finite(h, "hermitian_eig");
  const double n = h.norm();
  if (n > 0.0 && (h - h.adjoint()).norm() > tol::sym * n) {
    fail(ErrorCode::NotHermitian, "hermitian_eig: input is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) {
    fail(ErrorCode::ConvergenceFailure, "hermitian_eig: solver did not converge");
  }
  HermitianEigResult out;
  out.eigenvalues = es.eigenvalues().reverse();
  out.eigenvectors = es.eigenvectors().rowwise().reverse();
  canonicalize_phases(out.eigenvectors);
  return out;
}

SvdResult svd(const Matrix& m) {
  require_square_finite(m, "svd");
  Eigen::JacobiSVD<Matrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SvdResult out;
  out.left = solver.matrixU();
  out.singular_values = solver.singularValues();
  out.right = solver.matrixV();
  // A shared phase rotation of (u_k, v_k) leaves U S V^dag invariant.
  for (Eigen::Index k = 0; k < out.left.cols(); ++k) {
    const Complex ph = leading_phase(out.left.col(k));
    out.left.col(k) /= ph;
    out.right.col(k) /= ph;
  }
  return out;
}

TakagiFactorization takagi(const Matrix& c) {
  require_square_finite(c, "takagi");
  if (symmetric_residual(c) > tol::sym) {
    fail(ErrorCode::NotSymmetric, "takagi: input is not complex symmetric");
  }
  const Eigen::Index d = c.rows();
  const Matrix cs = symmetric_part(c);
  TakagiFactorization out;
  if (cs.norm() <= 0.0) {
    out.modes = Matrix::Identity(d, d);
    out.values = RealVector::Zero(d);
    return out;
  }

  // Rotate into the eigenbasis of C C^dag. There A = Q^dag C conj(Q) is
  // complex symmetric with A conj(A) diagonal, so Re(A) and Im(A) form a
  // commuting real symmetric pair that a joint Jacobi pass diagonalizes
  // without any eigenvalue-clustering decisions.
  Matrix h = cs * cs.adjoint();
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) {
    fail(ErrorCode::ConvergenceFailure, "takagi: eigensolver did not converge");
  }
  const Matrix q = es.eigenvectors();
  Matrix a = q.adjoint() * cs * q.conjugate();
  a = symmetric_part(a);

  RealMatrix re = a.real();
  RealMatrix im = a.imag();
  const RealMatrix o = joint_jacobi(re, im, kSweepsPerDim * static_cast<int>(d));

  const Matrix oc = o.cast<Complex>();
  const Matrix ad = oc.transpose() * a * oc;
  Matrix u = q * oc;
  RealVector values(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const Complex alpha = ad(k, k);
    values(k) = std::abs(alpha);
    const double theta = values(k) > 0.0 ? std::arg(alpha) : 0.0;
    u.col(k) *= std::exp(Complex(0.0, 0.5 * theta));
  }
  sort_by_value(u, values);
  canonicalize_signs(u);
  out.modes = std::move(u);
  out.values = std::move(values);
  return out;
}

YoulaFactorization youla(const Matrix& c) {
  require_square_finite(c, "youla");
  if (antisymmetric_residual(c) > tol::sym) {
    fail(ErrorCode::NotAntisymmetric, "youla: input is not antisymmetric");
  }
  const Eigen::Index d = c.rows();
  const Eigen::Index npairs = d / 2;
  const Matrix ca = antisymmetric_part(c);
  YoulaFactorization out;
  if (ca.norm() <= 0.0) {
    out.modes = Matrix::Identity(d, d);
    out.block_values = RealVector::Zero(npairs);
    return out;
  }

  Matrix h = ca * ca.adjoint();
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) {
    fail(ErrorCode::ConvergenceFailure, "youla: eigensolver did not converge");
  }
  RealVector lambda = es.eigenvalues().reverse();
  Matrix q = es.eigenvectors().rowwise().reverse();

  // In the eigenbasis of C C^dag the matrix A = Q^dag C conj(Q) is
  // antisymmetric and block diagonal over eigenvalue clusters, and every
  // coordinate vector is a con-eigenvector of A conj(A). Pairs are then
  // extracted greedily: u from the remaining coordinate directions,
  // w = -A conj(u) / |A conj(u)|, which satisfies the exact 2x2 block
  // relation by antisymmetry.
  Matrix a = q.adjoint() * ca * q.conjugate();
  a = antisymmetric_part(a);

  const double lmax = lambda(0);
  const double zero_cut = lmax * 1e-24;

  // Cluster the descending eigenvalues by relative gap.
  std::vector<std::pair<int, int>> clusters;  // [begin, end)
  {
    int begin = 0;
    int nz = 0;
    while (nz < d && lambda(nz) > zero_cut) ++nz;
    for (int i = 1; i <= nz; ++i) {
      if (i == nz || lambda(i - 1) - lambda(i) > 1e-8 * lambda(i - 1)) {
        clusters.emplace_back(begin, i);
        begin = i;
      }
    }
    // The nonzero singular values of an antisymmetric matrix pair up, so
    // every cluster must have even size; merge forward when the threshold
    // happens to cut through a pair, and demote a final straggler to the
    // zero pool.
    for (std::size_t k = 0; k + 1 < clusters.size(); ++k) {
      if ((clusters[k].second - clusters[k].first) % 2 != 0) {
        clusters[k].second = clusters[k + 1].second;
        clusters.erase(clusters.begin() + static_cast<long>(k) + 1);
        --k;
      }
    }
    if (!clusters.empty() &&
        (clusters.back().second - clusters.back().first) % 2 != 0) {
      clusters.back().second -= 1;
      if (clusters.back().second == clusters.back().first) clusters.pop_back();
    }
  }

  std::vector<Vector> columns;  // extracted orthonormal columns, in pair order
  std::vector<double> values;
  columns.reserve(static_cast<std::size_t>(d));

  auto orthogonalize = [&columns](Vector v) {
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vector& col : columns) {
        v -= col.dot(v) * col;
      }
    }
    return v;
  };

  for (const auto& [begin, end] : clusters) {
    const int m = end - begin;
    std::vector<bool> used(static_cast<std::size_t>(m), false);
    for (int step = 0; step < m / 2; ++step) {
      // Best remaining coordinate direction of this cluster.
      int pick = -1;
      double best = -1.0;
      Vector best_u;
      for (int j = 0; j < m; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        Vector cand = Vector::Zero(d);
        cand(begin + j) = Complex(1.0, 0.0);
        cand = orthogonalize(std::move(cand));
        const double nrm = cand.norm();
        if (nrm > best) {
          best = nrm;
          pick = j;
          best_u = cand / nrm;
        }
      }
      used[static_cast<std::size_t>(pick)] = true;
      Vector u = std::move(best_u);
      Vector y = a * u.conjugate();
      const double v = y.norm();
      if (v <= 1e-150) {
        // Exactly null direction despite the eigenvalue cut; leave the
        // remainder of this cluster to the zero-completion pass.
        break;
      }
      Vector w = orthogonalize(-y / v);
      w.normalize();
      columns.push_back(std::move(u));
      columns.push_back(std::move(w));
      values.push_back(v);
    }
  }

  // Complete to a unitary basis; leftover columns carry block value zero.
  // A nonzero antisymmetric matrix always yields at least one pair.
  const Eigen::Index extracted = static_cast<Eigen::Index>(columns.size());
  Matrix ua(d, d);
  for (Eigen::Index k = 0; k < extracted; ++k) {
    ua.col(k) = columns[static_cast<std::size_t>(k)];
  }
  if (extracted < d) {
    Eigen::HouseholderQR<Matrix> qr(ua.leftCols(extracted));
    Matrix full = qr.householderQ() * Matrix::Identity(d, d);
    for (Eigen::Index k = extracted; k < d; ++k) {
      ua.col(k) = full.col(k);
    }
  }

  // Order pairs by value descending (stable; extraction is already close),
  // rotate back out of the eigenbasis, then fix pair phases.
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return values[x] > values[y];
  });

  Matrix sorted(d, d);
  RealVector block_values = RealVector::Zero(npairs);
  Eigen::Index col = 0;
  for (std::size_t r = 0; r < order.size(); ++r) {
    const std::size_t k = order[r];
    sorted.col(col) = ua.col(static_cast<Eigen::Index>(2 * k));
    sorted.col(col + 1) = ua.col(static_cast<Eigen::Index>(2 * k + 1));
    block_values(static_cast<Eigen::Index>(r)) = values[k];
    col += 2;
  }
  for (Eigen::Index k = extracted; k < d; ++k) {
    sorted.col(col++) = ua.col(k);
  }

  Matrix u = q * sorted;
  for (std::size_t r = 0; r < order.size(); ++r) {
    // One free phase per pair: (e^{ia} u, e^{-ia} w) leaves the block fixed.
    const Eigen::Index k = static_cast<Eigen::Index>(2 * r);
    const Complex ph = leading_phase(u.col(k));
    u.col(k) /= ph;
    u.col(k + 1) *= ph;
  }
  for (Eigen::Index k = extracted; k < d; ++k) {
    u.col(k) /= leading_phase(u.col(k));
  }

  out.modes = std::move(u);
  out.block_values = std::move(block_values);
  return out;
}

Matrix youla_block_matrix(int dim, const RealVector& block_values) {
  Matrix j = Matrix::Zero(dim, dim);
  for (Eigen::Index k = 0; k < block_values.size(); ++k) {
    const Eigen::Index r = 2 * k;
    if (r + 1 >= dim) break;
    j(r, r + 1) = Complex(block_values(k), 0.0);
    j(r + 1, r) = Complex(-block_values(k), 0.0);
  }
  return j;
}

Matrix takagi_reconstruct(const TakagiFactorization& f) {
  return f.modes * f.values.cast<Complex>().asDiagonal() * f.modes.transpose();
}

Matrix youla_reconstruct(const YoulaFactorization& f) {
  const int d = static_cast<int>(f.modes.rows());
  return f.modes * youla_block_matrix(d, f.block_values) * f.modes.transpose();
}

}  // namespace ipent
