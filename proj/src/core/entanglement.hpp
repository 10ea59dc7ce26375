#pragma once

#include <cstdint>
#include <optional>

#include "core/decomposition.hpp"
#include "core/state.hpp"

namespace ipent {

// One-particle reduced density operator of a two-particle pure state:
// rho^(1) = C C^dag, rho^(2) = C^T conj(C). Hermitian, positive
// semidefinite, unit trace; for fermion and boson states the two agree.
struct ReducedDensity {
  Matrix matrix;
  RealVector eigenvalues;  // descending
};

ReducedDensity reduced_density(const CoefficientMatrix& state, int which);

// von Neumann entropy -sum lambda log2(lambda) in bits, with 0 log 0 = 0.
double von_neumann_entropy(const ReducedDensity& rho);

enum class Verdict {
  NonEntangledProduct,                // boson: both particles in one state
  NonEntangledSymmetrizedOrthogonal,  // boson: symmetrized orthogonal pair
  NonEntangledSlaterOne,              // fermion: single Slater determinant
  NonEntangledFactorized,             // distinguishable: product state
  Entangled,
};

const char* to_string(Verdict v) noexcept;
bool is_entangled(Verdict v) noexcept;

struct Classification {
  Verdict verdict;
  int rank_count = 0;       // Slater number (fermion) or Schmidt number
  double entropy_bits = 0;  // von Neumann entropy of rho^(1)
  std::optional<double> witness_value;  // filled by callers that ran a search
};

// Decides entanglement from the state's canonical decomposition and the
// reduced-density entropy:
//   fermion          non-entangled iff Slater number = 1 (then S = 1)
//   boson            non-entangled iff Schmidt number = 1 (then S = 0) or
//                    Schmidt number = 2 with S = 1
//   distinguishable  non-entangled iff Schmidt number = 1 (then S = 0)
// Both the rank-led and the entropy-led phrasing are evaluated; if they
// disagree (which only happens within tol::classify of a threshold) a
// ClassificationConflict error is raised rather than silently preferring
// one route.
Classification classify(const CoefficientMatrix& state);

// Expectation of the pair-property operator attached to the projector
// P = v v^dag: the probability of finding at least one particle in the
// range of P, computed as 1 - ||(I-P) C (I-P)^T||_F^2. Always in [0, 1];
// v must be a unit vector.
double witness_expectation(const CoefficientMatrix& state, const Vector& v);

struct WitnessReport {
  Vector vector;             // best unit vector found (P = v v^dag)
  double expectation = 0.0;  // witness_expectation(state, vector)
  int iterations = 0;        // ascent iterations spent on the winner
  int restarts_used = 0;
};

// Seeded multi-start maximization of the witness expectation. Each restart
// iterates v <- top eigenvector of rho1 + rho2 - (C conj(v))(C conj(v))^dag
// until the expectation stops improving by 1e-12 or max_iters is hit.
// Closed-form candidates from the state's decomposition are always scored
// as well, so non-entangled states reach expectation 1 up to roundoff.
// Deterministic for fixed (seed, restarts, max_iters).
WitnessReport witness_search(const CoefficientMatrix& state,
                             std::uint64_t seed, int restarts = 8,
                             int max_iters = 500);

}  // namespace ipent
