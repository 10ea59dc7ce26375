#include "ipent.h"

#include <cstring>
#include <fstream>
#include <iostream>
#include <new>
#include <string>

#include "core/decomposition.hpp"
#include "core/entanglement.hpp"
#include "core/errors.hpp"
#include "core/oracle.hpp"
#include "core/state.hpp"
#include "core/state_io.hpp"
#include "core/sweep.hpp"
#include "core/version.hpp"

using namespace ipent;

struct ipent_state {
  CoefficientMatrix value;
};

struct ipent_decomposition {
  DecompositionResult value;
  double residual = 0.0;
};

namespace {

thread_local std::string g_last_error;

ipent_status status_from_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return IPENT_ERR_DIMENSION_MISMATCH;
    case ErrorCode::ZeroState: return IPENT_ERR_ZERO_STATE;
    case ErrorCode::SymmetryViolation: return IPENT_ERR_SYMMETRY_VIOLATION;
    case ErrorCode::ParallelVectors: return IPENT_ERR_PARALLEL_VECTORS;
    case ErrorCode::ParseError: return IPENT_ERR_PARSE;
    case ErrorCode::NotHermitian: return IPENT_ERR_NOT_HERMITIAN;
    case ErrorCode::NotSymmetric: return IPENT_ERR_NOT_SYMMETRIC;
    case ErrorCode::NotAntisymmetric: return IPENT_ERR_NOT_ANTISYMMETRIC;
    case ErrorCode::ConvergenceFailure: return IPENT_ERR_CONVERGENCE;
    case ErrorCode::NonUnitVector: return IPENT_ERR_NON_UNIT_VECTOR;
    case ErrorCode::ClassificationConflict:
      return IPENT_ERR_CLASSIFICATION_CONFLICT;
    case ErrorCode::InvalidArgument: return IPENT_ERR_INVALID_ARGUMENT;
    case ErrorCode::IoError: return IPENT_ERR_IO;
  }
  return IPENT_ERR_INTERNAL;
}

template <typename Fn>
ipent_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return IPENT_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_from_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return IPENT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return IPENT_ERR_INTERNAL;
  }
}

ipent_status invalid(const char* message) {
  g_last_error = message;
  return IPENT_ERR_INVALID_ARGUMENT;
}

SymmetryClass to_core(ipent_symmetry s) {
  switch (s) {
    case IPENT_SYMMETRY_FERMION: return SymmetryClass::Fermion;
    case IPENT_SYMMETRY_BOSON: return SymmetryClass::Boson;
    case IPENT_SYMMETRY_DISTINGUISHABLE: return SymmetryClass::Distinguishable;
  }
  fail(ErrorCode::InvalidArgument, "unknown symmetry value");
}

ipent_symmetry from_core(SymmetryClass s) {
  switch (s) {
    case SymmetryClass::Fermion: return IPENT_SYMMETRY_FERMION;
    case SymmetryClass::Boson: return IPENT_SYMMETRY_BOSON;
    case SymmetryClass::Distinguishable:
      return IPENT_SYMMETRY_DISTINGUISHABLE;
  }
  return IPENT_SYMMETRY_DISTINGUISHABLE;
}

ipent_verdict from_core(Verdict v) {
  switch (v) {
    case Verdict::NonEntangledProduct:
      return IPENT_VERDICT_NON_ENTANGLED_PRODUCT;
    case Verdict::NonEntangledSymmetrizedOrthogonal:
      return IPENT_VERDICT_NON_ENTANGLED_SYMMETRIZED_ORTHOGONAL;
    case Verdict::NonEntangledSlaterOne:
      return IPENT_VERDICT_NON_ENTANGLED_SLATER_ONE;
    case Verdict::NonEntangledFactorized:
      return IPENT_VERDICT_NON_ENTANGLED_FACTORIZED;
    case Verdict::Entangled: return IPENT_VERDICT_ENTANGLED;
  }
  return IPENT_VERDICT_ENTANGLED;
}

Matrix matrix_from_reim(int dim, const double* reim) {
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const std::size_t k = 2 * (static_cast<std::size_t>(i) * dim + j);
      m(i, j) = Complex(reim[k], reim[k + 1]);
    }
  }
  return m;
}

Vector vector_from_reim(int dim, const double* reim) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) {
    v(i) = Complex(reim[2 * i], reim[2 * i + 1]);
  }
  return v;
}

}  // namespace

const char* ipent_version(void) { return kVersion; }

const char* ipent_status_name(ipent_status status) {
  switch (status) {
    case IPENT_OK: return "ok";
    case IPENT_ERR_DIMENSION_MISMATCH: return "dimension-mismatch";
    case IPENT_ERR_ZERO_STATE: return "zero-state";
    case IPENT_ERR_SYMMETRY_VIOLATION: return "symmetry-violation";
    case IPENT_ERR_PARALLEL_VECTORS: return "parallel-vectors";
    case IPENT_ERR_PARSE: return "parse-error";
    case IPENT_ERR_NOT_HERMITIAN: return "not-hermitian";
    case IPENT_ERR_NOT_SYMMETRIC: return "not-symmetric";
    case IPENT_ERR_NOT_ANTISYMMETRIC: return "not-antisymmetric";
    case IPENT_ERR_CONVERGENCE: return "convergence-failure";
    case IPENT_ERR_NON_UNIT_VECTOR: return "non-unit-vector";
    case IPENT_ERR_CLASSIFICATION_CONFLICT: return "classification-conflict";
    case IPENT_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case IPENT_ERR_IO: return "io-error";
    case IPENT_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* ipent_verdict_name(ipent_verdict verdict) {
  switch (verdict) {
    case IPENT_VERDICT_NON_ENTANGLED_PRODUCT:
      return to_string(Verdict::NonEntangledProduct);
    case IPENT_VERDICT_NON_ENTANGLED_SYMMETRIZED_ORTHOGONAL:
      return to_string(Verdict::NonEntangledSymmetrizedOrthogonal);
    case IPENT_VERDICT_NON_ENTANGLED_SLATER_ONE:
      return to_string(Verdict::NonEntangledSlaterOne);
    case IPENT_VERDICT_NON_ENTANGLED_FACTORIZED:
      return to_string(Verdict::NonEntangledFactorized);
    case IPENT_VERDICT_ENTANGLED: return to_string(Verdict::Entangled);
  }
  return "unknown";
}

const char* ipent_symmetry_name(ipent_symmetry symmetry) {
  switch (symmetry) {
    case IPENT_SYMMETRY_FERMION: return to_string(SymmetryClass::Fermion);
    case IPENT_SYMMETRY_BOSON: return to_string(SymmetryClass::Boson);
    case IPENT_SYMMETRY_DISTINGUISHABLE:
      return to_string(SymmetryClass::Distinguishable);
  }
  return "unknown";
}

const char* ipent_last_error(void) { return g_last_error.c_str(); }

ipent_status ipent_state_from_coefficients(int dim, const double* reim,
                                           ipent_symmetry symmetry,
                                           ipent_state** out) {
  if (!reim || !out) return invalid("null argument");
  if (dim < 1) return invalid("dimension must be positive");
  return guarded([&] {
    *out = new ipent_state{
        CoefficientMatrix::from_coefficients(matrix_from_reim(dim, reim),
                                             to_core(symmetry))};
  });
}

ipent_status ipent_state_antisymmetrized_product(int dim,
                                                 const double* phi_reim,
                                                 const double* chi_reim,
                                                 ipent_state** out) {
  if (!phi_reim || !chi_reim || !out) return invalid("null argument");
  if (dim < 1) return invalid("dimension must be positive");
  return guarded([&] {
    auto phi = SingleParticleVector::from_entries(vector_from_reim(dim, phi_reim));
    auto chi = SingleParticleVector::from_entries(vector_from_reim(dim, chi_reim));
    *out = new ipent_state{antisymmetrize_product(phi, chi)};
  });
}

ipent_status ipent_state_symmetrized_product(int dim, const double* phi_reim,
                                             const double* chi_reim,
                                             ipent_state** out) {
  if (!phi_reim || !chi_reim || !out) return invalid("null argument");
  if (dim < 1) return invalid("dimension must be positive");
  return guarded([&] {
    auto phi = SingleParticleVector::from_entries(vector_from_reim(dim, phi_reim));
    auto chi = SingleParticleVector::from_entries(vector_from_reim(dim, chi_reim));
    *out = new ipent_state{symmetrize_product(phi, chi)};
  });
}

ipent_status ipent_state_random(ipent_symmetry symmetry, int dim,
                                uint64_t seed, ipent_state** out) {
  if (!out) return invalid("null argument");
  return guarded([&] {
    *out = new ipent_state{oracle::random_state(to_core(symmetry), dim, seed)};
  });
}

ipent_status ipent_state_slater_form(int dim, const double* coefficients,
                                     int count, ipent_state** out) {
  if (!coefficients || !out) return invalid("null argument");
  if (count < 1) return invalid("need at least one coefficient");
  return guarded([&] {
    RealVector a(count);
    for (int k = 0; k < count; ++k) a(k) = coefficients[k];
    *out = new ipent_state{slater_form_state(dim, a)};
  });
}

ipent_status ipent_state_schmidt_form(int dim, const double* coefficients,
                                      int count, ipent_state** out) {
  if (!coefficients || !out) return invalid("null argument");
  if (count < 1) return invalid("need at least one coefficient");
  return guarded([&] {
    RealVector b(count);
    for (int k = 0; k < count; ++k) b(k) = coefficients[k];
    *out = new ipent_state{schmidt_form_state(dim, b)};
  });
}

ipent_status ipent_state_load(const char* path, ipent_state** out) {
  if (!path || !out) return invalid("null argument");
  return guarded([&] { *out = new ipent_state{load_state(path)}; });
}

ipent_status ipent_state_save(const ipent_state* state, const char* path) {
  if (!state || !path) return invalid("null argument");
  return guarded([&] { save_state(state->value, path); });
}

void ipent_state_free(ipent_state* state) { delete state; }

int ipent_state_dim(const ipent_state* state) {
  return state ? state->value.dim() : 0;
}

ipent_symmetry ipent_state_symmetry(const ipent_state* state) {
  return state ? from_core(state->value.symmetry())
               : IPENT_SYMMETRY_DISTINGUISHABLE;
}

ipent_status ipent_state_coefficients(const ipent_state* state, double* reim) {
  if (!state || !reim) return invalid("null argument");
  const int d = state->value.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Complex z = state->value.entries()(i, j);
      const std::size_t k = 2 * (static_cast<std::size_t>(i) * d + j);
      reim[k] = z.real();
      reim[k + 1] = z.imag();
    }
  }
  return IPENT_OK;
}

ipent_status ipent_state_inner_product(const ipent_state* a,
                                       const ipent_state* b, double* re,
                                       double* im) {
  if (!a || !b || !re || !im) return invalid("null argument");
  return guarded([&] {
    const Complex z = inner_product(a->value, b->value);
    *re = z.real();
    *im = z.imag();
  });
}

ipent_status ipent_classify(const ipent_state* state,
                            ipent_classification* out) {
  if (!state || !out) return invalid("null argument");
  return guarded([&] {
    const Classification cls = classify(state->value);
    out->verdict = from_core(cls.verdict);
    out->rank = cls.rank_count;
    out->entropy_bits = cls.entropy_bits;
  });
}

ipent_status ipent_decompose(const ipent_state* state,
                             ipent_decomposition** out) {
  if (!state || !out) return invalid("null argument");
  return guarded([&] {
    DecompositionResult dec = decompose(state->value);
    const double residual = reconstruction_residual(state->value, dec);
    *out = new ipent_decomposition{std::move(dec), residual};
  });
}

void ipent_decomposition_free(ipent_decomposition* decomposition) {
  delete decomposition;
}

const char* ipent_decomposition_kind(const ipent_decomposition* d) {
  return d ? to_string(d->value.kind) : "unknown";
}

int ipent_decomposition_count(const ipent_decomposition* d) {
  return d ? static_cast<int>(d->value.coefficients.size()) : 0;
}

int ipent_decomposition_rank(const ipent_decomposition* d) {
  return d ? d->value.effective_rank : 0;
}

ipent_status ipent_decomposition_values(const ipent_decomposition* d,
                                        double* values) {
  if (!d || !values) return invalid("null argument");
  for (Eigen::Index k = 0; k < d->value.coefficients.size(); ++k) {
    values[k] = d->value.coefficients(k);
  }
  return IPENT_OK;
}

double ipent_decomposition_residual(const ipent_decomposition* d) {
  return d ? d->residual : 0.0;
}

int ipent_decomposition_near_threshold(const ipent_decomposition* d) {
  return d && d->value.near_threshold ? 1 : 0;
}

ipent_status ipent_witness_expectation(const ipent_state* state,
                                       const double* v_reim, double* out) {
  if (!state || !v_reim || !out) return invalid("null argument");
  return guarded([&] {
    *out = witness_expectation(state->value,
                               vector_from_reim(state->value.dim(), v_reim));
  });
}

ipent_status ipent_witness_search(const ipent_state* state, uint64_t seed,
                                  int restarts, int max_iters, double* v_reim,
                                  ipent_witness_report* report) {
  if (!state || !v_reim || !report) return invalid("null argument");
  return guarded([&] {
    const WitnessReport r =
        witness_search(state->value, seed, restarts, max_iters);
    for (int k = 0; k < state->value.dim(); ++k) {
      v_reim[2 * k] = r.vector(k).real();
      v_reim[2 * k + 1] = r.vector(k).imag();
    }
    report->expectation = r.expectation;
    report->iterations = r.iterations;
    report->restarts_used = r.restarts_used;
  });
}

ipent_status ipent_sweep_run(const char* config_path, const char* output_path,
                             int* invariant_failures) {
  if (!config_path || !invariant_failures) return invalid("null argument");
  return guarded([&] {
    const auto config = oracle::SweepConfig::from_json_file(config_path);
    const auto result = oracle::run_sweep(config);
    // The report keeps exactly one line per state; invariant failures go to
    // the error stream.
    if (output_path) {
      std::ofstream out(output_path);
      if (!out) {
        fail(ErrorCode::IoError,
             std::string("cannot write sweep report '") + output_path + "'");
      }
      oracle::write_jsonl(result, out);
    } else {
      oracle::write_jsonl(result, std::cout);
    }
    for (const std::string& f : result.failures) {
      std::cerr << "invariant failure: " << f << '\n';
    }
    *invariant_failures = static_cast<int>(result.failures.size());
  });
}
