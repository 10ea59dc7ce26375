#include "core/state_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "core/errors.hpp"

namespace ipent {

namespace {

using nlohmann::json;

Matrix coefficients_from_json(const json& rows, int dim) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
    fail(ErrorCode::ParseError,
         "'coefficients' must be an array of " + std::to_string(dim) + " rows");
  }
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      fail(ErrorCode::ParseError,
           "row " + std::to_string(i) + " must have " + std::to_string(dim) +
               " entries");
    }
    for (int j = 0; j < dim; ++j) {
      const json& entry = row[static_cast<std::size_t>(j)];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        fail(ErrorCode::ParseError, "entry (" + std::to_string(i) + ", " +
                                        std::to_string(j) +
                                        ") must be a [re, im] pair");
      }
      m(i, j) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return m;
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

CoefficientMatrix read_state(std::istream& in, const std::string& what) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, what + ": " + e.what());
  }
  if (!doc.is_object()) {
    fail(ErrorCode::ParseError, what + ": top-level value must be an object");
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    fail(ErrorCode::ParseError, what + ": missing integer field 'dim'");
  }
  if (!doc.contains("symmetry") || !doc["symmetry"].is_string()) {
    fail(ErrorCode::ParseError, what + ": missing string field 'symmetry'");
  }
  if (!doc.contains("coefficients")) {
    fail(ErrorCode::ParseError, what + ": missing field 'coefficients'");
  }
  const int dim = doc["dim"].get<int>();
  if (dim < 2) {
    fail(ErrorCode::ParseError, what + ": 'dim' must be at least 2");
  }
  const SymmetryClass symmetry =
      symmetry_from_string(doc["symmetry"].get<std::string>());
  Matrix m = coefficients_from_json(doc["coefficients"], dim);
  return CoefficientMatrix::from_coefficients(m, symmetry);
}

void write_state(const CoefficientMatrix& state, std::ostream& out) {
  const Matrix& m = state.entries();
  const int d = state.dim();
  out << "{\n";
  out << "  \"dim\": " << d << ",\n";
  out << "  \"symmetry\": \"" << to_string(state.symmetry()) << "\",\n";
  out << "  \"coefficients\": [\n";
  for (int i = 0; i < d; ++i) {
    out << "    [";
    for (int j = 0; j < d; ++j) {
      out << '[' << format_double(m(i, j).real()) << ", "
          << format_double(m(i, j).imag()) << ']';
      if (j + 1 < d) out << ", ";
    }
    out << ']' << (i + 1 < d ? "," : "") << '\n';
  }
  out << "  ]\n";
  out << "}\n";
}

CoefficientMatrix load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorCode::IoError, "cannot open state file '" + path + "'");
  }
  return read_state(in, path);
}

void save_state(const CoefficientMatrix& state, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    fail(ErrorCode::IoError, "cannot write state file '" + path + "'");
  }
  write_state(state, out);
  out.flush();
  if (!out) {
    fail(ErrorCode::IoError, "failed writing state file '" + path + "'");
  }
}

}  // namespace ipent
