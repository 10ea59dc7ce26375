/*
 * ipent -- entanglement analysis for pure states of two identical particles.
 *
 * C API of the shared library. All objects are opaque handles created and
 * destroyed through these functions; every fallible call returns an
 * ipent_status and writes its result through out-parameters. On failure a
 * human-readable message is available from ipent_last_error() (thread
 * local). All functions are thread-safe: the library keeps no mutable
 * state besides that error slot.
 *
 * Coefficient matrices cross this boundary as row-major double arrays with
 * interleaved real/imaginary parts: entry (i, j) of a dim x dim matrix
 * occupies slots 2*(i*dim + j) and 2*(i*dim + j) + 1. Vectors use the same
 * layout with 2*dim slots.
 */

#ifndef IPENT_H
#define IPENT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ipent_status {
  IPENT_OK = 0,
  IPENT_ERR_DIMENSION_MISMATCH = 1,
  IPENT_ERR_ZERO_STATE = 2,
  IPENT_ERR_SYMMETRY_VIOLATION = 3,
  IPENT_ERR_PARALLEL_VECTORS = 4,
  IPENT_ERR_PARSE = 5,
  IPENT_ERR_NOT_HERMITIAN = 6,
  IPENT_ERR_NOT_SYMMETRIC = 7,
  IPENT_ERR_NOT_ANTISYMMETRIC = 8,
  IPENT_ERR_CONVERGENCE = 9,
  IPENT_ERR_NON_UNIT_VECTOR = 10,
  IPENT_ERR_CLASSIFICATION_CONFLICT = 11,
  IPENT_ERR_INVALID_ARGUMENT = 12,
  IPENT_ERR_IO = 13,
  IPENT_ERR_INTERNAL = 14
} ipent_status;

typedef enum ipent_symmetry {
  IPENT_SYMMETRY_FERMION = 0,
  IPENT_SYMMETRY_BOSON = 1,
  IPENT_SYMMETRY_DISTINGUISHABLE = 2
} ipent_symmetry;

typedef enum ipent_verdict {
  IPENT_VERDICT_NON_ENTANGLED_PRODUCT = 0,
  IPENT_VERDICT_NON_ENTANGLED_SYMMETRIZED_ORTHOGONAL = 1,
  IPENT_VERDICT_NON_ENTANGLED_SLATER_ONE = 2,
  IPENT_VERDICT_NON_ENTANGLED_FACTORIZED = 3,
  IPENT_VERDICT_ENTANGLED = 4
} ipent_verdict;

typedef struct ipent_state ipent_state;
typedef struct ipent_decomposition ipent_decomposition;

const char* ipent_version(void);
const char* ipent_status_name(ipent_status status);
const char* ipent_verdict_name(ipent_verdict verdict);
const char* ipent_symmetry_name(ipent_symmetry symmetry);

/* Message of the most recent failure on this thread ("" if none). */
const char* ipent_last_error(void);

/* ---- state construction -------------------------------------------- */

/* Validates the declared exchange symmetry and normalizes. */
ipent_status ipent_state_from_coefficients(int dim, const double* reim,
                                           ipent_symmetry symmetry,
                                           ipent_state** out);

/* Fermion state obtained by antisymmetrizing phi (x) chi. */
ipent_status ipent_state_antisymmetrized_product(int dim,
                                                 const double* phi_reim,
                                                 const double* chi_reim,
                                                 ipent_state** out);

/* Boson state obtained by symmetrizing phi (x) chi. */
ipent_status ipent_state_symmetrized_product(int dim, const double* phi_reim,
                                             const double* chi_reim,
                                             ipent_state** out);

/* Seeded random state of the given class (deterministic per seed). */
ipent_status ipent_state_random(ipent_symmetry symmetry, int dim,
                                uint64_t seed, ipent_state** out);

/* Fermion state with given Slater coefficients over the standard basis. */
ipent_status ipent_state_slater_form(int dim, const double* coefficients,
                                     int count, ipent_state** out);

/* Boson state with given Schmidt coefficients on the diagonal. */
ipent_status ipent_state_schmidt_form(int dim, const double* coefficients,
                                      int count, ipent_state** out);

ipent_status ipent_state_load(const char* path, ipent_state** out);
ipent_status ipent_state_save(const ipent_state* state, const char* path);
void ipent_state_free(ipent_state* state);

int ipent_state_dim(const ipent_state* state);
ipent_symmetry ipent_state_symmetry(const ipent_state* state);
/* Copies the coefficient matrix into reim (2 * dim * dim doubles). */
ipent_status ipent_state_coefficients(const ipent_state* state, double* reim);
ipent_status ipent_state_inner_product(const ipent_state* a,
                                       const ipent_state* b, double* re,
                                       double* im);

/* ---- analysis -------------------------------------------------------- */

typedef struct ipent_classification {
  ipent_verdict verdict;
  int rank;            /* Slater number (fermion) or Schmidt number */
  double entropy_bits; /* von Neumann entropy of the reduced density */
} ipent_classification;

ipent_status ipent_classify(const ipent_state* state,
                            ipent_classification* out);

ipent_status ipent_decompose(const ipent_state* state,
                             ipent_decomposition** out);
void ipent_decomposition_free(ipent_decomposition* decomposition);

/* "slater", "schmidt-boson" or "schmidt-distinguishable". */
const char* ipent_decomposition_kind(const ipent_decomposition* d);
int ipent_decomposition_count(const ipent_decomposition* d);
int ipent_decomposition_rank(const ipent_decomposition* d);
/* Coefficients descending; values must hold count doubles. */
ipent_status ipent_decomposition_values(const ipent_decomposition* d,
                                        double* values);
double ipent_decomposition_residual(const ipent_decomposition* d);
int ipent_decomposition_near_threshold(const ipent_decomposition* d);

/* Expectation of the pair-property operator for P = v v^dag. */
ipent_status ipent_witness_expectation(const ipent_state* state,
                                       const double* v_reim, double* out);

typedef struct ipent_witness_report {
  double expectation;
  int iterations;
  int restarts_used;
} ipent_witness_report;

/* Seeded multi-start maximization; v_reim (2 * dim doubles) receives the
 * best probe vector found. */
ipent_status ipent_witness_search(const ipent_state* state, uint64_t seed,
                                  int restarts, int max_iters,
                                  double* v_reim,
                                  ipent_witness_report* report);

/* ---- verification sweep --------------------------------------------- */

/* Runs the seeded verification sweep described by the JSON config file and
 * writes one JSON line per state to output_path (stdout when NULL).
 * invariant_failures receives the number of violated invariants. */
ipent_status ipent_sweep_run(const char* config_path, const char* output_path,
                             int* invariant_failures);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* IPENT_H */
