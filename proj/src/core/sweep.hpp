#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "core/state.hpp"

namespace ipent::oracle {

// Configuration of a verification sweep (JSON file):
//
//   {
//     "classes": ["fermion", "boson", "distinguishable"],
//     "dims": [2, 3, 4, 5, 6],
//     "count": 100,
//     "seed": 20240001,
//     "witness": true,
//     "witness_restarts": 4,
//     "witness_max_iters": 200,
//     "inject_corruption": false
//   }
//
// Every field is optional; the values above are the defaults apart from
// dims/classes which default to all classes at dims 2..6.
struct SweepConfig {
  std::vector<SymmetryClass> classes;
  std::vector<int> dims;
  int count = 100;
  std::uint64_t seed = 20240001;
  bool witness = true;
  int witness_restarts = 4;
  int witness_max_iters = 200;
  bool inject_corruption = false;

  static SweepConfig defaults();
  static SweepConfig from_json_string(const std::string& text);
  static SweepConfig from_json_file(const std::string& path);
};

struct SweepRecord {
  std::uint64_t seed = 0;
  SymmetryClass symmetry = SymmetryClass::Fermion;
  int dim = 0;
  std::string verdict;  // verdict name, or "error"
  int rank = 0;
  double entropy = 0.0;
  std::optional<double> witness;
  double residual = 0.0;
  std::optional<std::string> error;
};

struct SweepResult {
  std::vector<SweepRecord> records;        // one per generated state
  std::vector<std::string> failures;       // human-readable invariant breaks
  bool ok() const { return failures.empty(); }
};

// Generates the seeded corpus and cross-checks, per state:
//   - declared symmetry residual and unit normalization,
//   - fast-path entropy against the flattened-vector oracle (1e-10),
//   - decomposition rank against the reduced-density rank,
//   - classify() against the verdict re-derived from (rank, entropy),
//   - decomposition reconstruction residual (1e-10),
//   - witness expectation >= 1 - 1e-8 for non-entangled states.
SweepResult run_sweep(const SweepConfig& config);

// One JSON line per record.
void write_jsonl(const SweepResult& result, std::ostream& out);

}  // namespace ipent::oracle
