#pragma once

#include <cstdint>

#include "core/entanglement.hpp"
#include "core/state.hpp"

namespace ipent::oracle {

// Independent brute-force verifiers and seeded generators. Everything here
// recomputes results along a different route than the fast path it checks,
// and is deterministic given seeds.

// Entropy computed from the flattened d^2 amplitude vector: the reduced
// density is accumulated entrywise from |psi>, not formed as a matrix
// product.
double entropy_direct(const CoefficientMatrix& state, int which);

struct OverlapCheck {
  RealVector takagi_values;  // of the symmetrized product
  bool equal_pair = false;   // |b1 - b2| <= 1e-10
  double overlap = 0.0;      // |<phi|chi>|
};

// Symmetrizes the product of two single-particle states and reports whether
// the two leading Schmidt coefficients coincide; parallel inputs fall
// through to the rank-one product case.
OverlapCheck overlap_theorem_check(const SingleParticleVector& phi,
                                   const SingleParticleVector& chi);

// Exhaustive witness maximum for dim-2 states over the Bloch sphere
// v = (cos(theta/2), e^{i phi} sin(theta/2)), on a polar x azimuth grid,
// followed by deterministic local grid refinement around the best cell so
// the returned value is within 1e-6 of the true supremum.
double witness_grid_d2(const CoefficientMatrix& state, int polar = 720,
                       int azimuth = 1440);

// Three-term evaluation of the pair-property operator
// P(x)(I-P) + (I-P)(x)P + P(x)P as an explicit d^2 x d^2 matrix; agrees
// with witness_expectation to roundoff.
double witness_expectation_direct(const CoefficientMatrix& state,
                                  const Vector& v);

// Seeded random states: complex normal entries (see SplitMix64) projected
// onto the declared symmetry class and normalized.
CoefficientMatrix random_state(SymmetryClass symmetry, int dim,
                               std::uint64_t seed);

SingleParticleVector random_unit_vector(int dim, std::uint64_t seed);

// Haar-distributed unitary from the QR of a complex normal matrix with the
// R diagonal phases fixed.
Matrix random_unitary(int dim, std::uint64_t seed);

// Rank of the reduced density operator with the threshold matched to the
// decomposition's coefficient threshold (eigenvalues of rho are squared
// coefficients; fermion eigenvalues are a_i^2 / 2).
int density_rank(const CoefficientMatrix& state);

// Re-derives the verdict from (symmetry, reduced-density rank, entropy)
// alone, independent of the decomposition route used by classify().
Verdict rederive_verdict(SymmetryClass symmetry, int rho_rank,
                         double entropy_bits);

}  // namespace ipent::oracle
