#pragma once

#include <iosfwd>
#include <string>

#include "core/state.hpp"

namespace ipent {

// State file format (JSON):
//
//   {
//     "dim": 2,
//     "symmetry": "fermion" | "boson" | "distinguishable",
//     "coefficients": [ [ [re, im], ... d entries ... ], ... d rows ... ]
//   }
//
// Rows are in row-major order and every number is rendered with 17
// significant digits, so a save/load round trip reproduces the stored
// doubles exactly.

CoefficientMatrix load_state(const std::string& path);
void save_state(const CoefficientMatrix& state, const std::string& path);

CoefficientMatrix read_state(std::istream& in, const std::string& what);
void write_state(const CoefficientMatrix& state, std::ostream& out);

// Lossless double -> decimal rendering used by every JSON writer in the
// library (17 significant digits).
std::string format_double(double value);

}  // namespace ipent
