#include "core/sweep.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "core/decomposition.hpp"
#include "core/entanglement.hpp"
#include "core/errors.hpp"
#include "core/oracle.hpp"
#include "core/state_io.hpp"

namespace ipent::oracle {

namespace {

using nlohmann::json;

constexpr double kEntropyAgreement = 1e-10;
constexpr double kResidualBudget = 1e-10;
constexpr double kWitnessFloor = 1e-8;

std::uint64_t state_seed(std::uint64_t base, int class_index, int dim, int i) {
  return base + 1000003ULL * static_cast<std::uint64_t>(class_index) +
         10007ULL * static_cast<std::uint64_t>(dim) +
         static_cast<std::uint64_t>(i);
}

}  // namespace

SweepConfig SweepConfig::defaults() {
  SweepConfig c;
  c.classes = {SymmetryClass::Fermion, SymmetryClass::Boson,
               SymmetryClass::Distinguishable};
  c.dims = {2, 3, 4, 5, 6};
  return c;
}

SweepConfig SweepConfig::from_json_string(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, std::string("sweep config: ") + e.what());
  }
  if (!doc.is_object()) {
    fail(ErrorCode::ParseError, "sweep config: top-level value must be an object");
  }
  SweepConfig c = defaults();
  if (doc.contains("classes")) {
    if (!doc["classes"].is_array()) {
      fail(ErrorCode::ParseError, "sweep config: 'classes' must be an array");
    }
    c.classes.clear();
    for (const auto& item : doc["classes"]) {
      if (!item.is_string()) {
        fail(ErrorCode::ParseError, "sweep config: class names must be strings");
      }
      c.classes.push_back(symmetry_from_string(item.get<std::string>()));
    }
  }
  if (doc.contains("dims")) {
    if (!doc["dims"].is_array() || doc["dims"].empty()) {
      fail(ErrorCode::ParseError, "sweep config: 'dims' must be a nonempty array");
    }
    c.dims.clear();
    for (const auto& item : doc["dims"]) {
      if (!item.is_number_integer() || item.get<int>() < 2) {
        fail(ErrorCode::ParseError, "sweep config: dims must be integers >= 2");
      }
      c.dims.push_back(item.get<int>());
    }
  }
  if (doc.contains("count")) {
    if (!doc["count"].is_number_integer() || doc["count"].get<int>() < 1) {
      fail(ErrorCode::ParseError, "sweep config: 'count' must be a positive integer");
    }
    c.count = doc["count"].get<int>();
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer()) {
      fail(ErrorCode::ParseError, "sweep config: 'seed' must be an integer");
    }
    c.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("witness")) {
    if (!doc["witness"].is_boolean()) {
      fail(ErrorCode::ParseError, "sweep config: 'witness' must be a boolean");
    }
    c.witness = doc["witness"].get<bool>();
  }
  if (doc.contains("witness_restarts")) {
    c.witness_restarts = doc["witness_restarts"].get<int>();
  }
  if (doc.contains("witness_max_iters")) {
    c.witness_max_iters = doc["witness_max_iters"].get<int>();
  }
  if (doc.contains("inject_corruption")) {
    if (!doc["inject_corruption"].is_boolean()) {
      fail(ErrorCode::ParseError,
           "sweep config: 'inject_corruption' must be a boolean");
    }
    c.inject_corruption = doc["inject_corruption"].get<bool>();
  }
  if (c.classes.empty()) {
    fail(ErrorCode::ParseError, "sweep config: no classes selected");
  }
  return c;
}

SweepConfig SweepConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorCode::IoError, "cannot open sweep config '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_string(buf.str());
}

SweepResult run_sweep(const SweepConfig& config) {
  SweepResult result;
  bool corruption_pending = config.inject_corruption;

  for (std::size_t ci = 0; ci < config.classes.size(); ++ci) {
    const SymmetryClass symmetry = config.classes[ci];
    for (int dim : config.dims) {
      for (int i = 0; i < config.count; ++i) {
        const std::uint64_t seed =
            state_seed(config.seed, static_cast<int>(ci), dim, i);
        SweepRecord rec;
        rec.seed = seed;
        rec.symmetry = symmetry;
        rec.dim = dim;
        try {
          CoefficientMatrix state = random_state(symmetry, dim, seed);
          Matrix entries = state.entries();
          if (corruption_pending) {
            // Negative-path proof: break the first state and make sure the
            // sweep reports it instead of passing silently.
            corruption_pending = false;
            entries(0, 0) += Complex(0.17, 0.0);
            const double res = symmetry_residual(entries, symmetry);
            const double norm_drift = std::abs(entries.norm() - 1.0);
            if (res > tol::sym || norm_drift > tol::norm) {
              throw Error(ErrorCode::SymmetryViolation,
                          "corrupted state failed its invariants");
            }
            result.failures.push_back("seed " + std::to_string(seed) +
                                      ": injected corruption went undetected");
            result.records.push_back(std::move(rec));
            continue;
          }

          const double res_sym = symmetry_residual(entries, symmetry);
          if (res_sym > tol::sym) {
            result.failures.push_back("seed " + std::to_string(seed) +
                                      ": symmetry residual " +
                                      std::to_string(res_sym));
          }
          if (std::abs(entries.norm() - 1.0) > tol::norm) {
            result.failures.push_back("seed " + std::to_string(seed) +
                                      ": normalization drift");
          }

          const Classification cls = classify(state);
          rec.verdict = to_string(cls.verdict);
          rec.rank = cls.rank_count;
          rec.entropy = cls.entropy_bits;

          const double s_direct = entropy_direct(state, 1);
          if (std::abs(s_direct - cls.entropy_bits) > kEntropyAgreement) {
            result.failures.push_back(
                "seed " + std::to_string(seed) + ": entropy mismatch fast " +
                std::to_string(cls.entropy_bits) + " vs direct " +
                std::to_string(s_direct));
          }

          const DecompositionResult dec = decompose(state);
          const int rho_rank = density_rank(state);
          const int expected_rho_rank =
              symmetry == SymmetryClass::Fermion ? 2 * dec.effective_rank
                                                 : dec.effective_rank;
          if (rho_rank != expected_rho_rank) {
            result.failures.push_back("seed " + std::to_string(seed) +
                                      ": density rank " +
                                      std::to_string(rho_rank) +
                                      " disagrees with decomposition rank " +
                                      std::to_string(dec.effective_rank));
          }
          const Verdict independent =
              rederive_verdict(symmetry, rho_rank, s_direct);
          if (independent != cls.verdict) {
            result.failures.push_back(
                "seed " + std::to_string(seed) + ": verdict " +
                to_string(cls.verdict) + " vs oracle " + to_string(independent));
          }

          rec.residual = reconstruction_residual(state, dec);
          if (rec.residual > kResidualBudget) {
            result.failures.push_back("seed " + std::to_string(seed) +
                                      ": reconstruction residual " +
                                      std::to_string(rec.residual));
          }

          if (config.witness) {
            const WitnessReport report = witness_search(
                state, seed, config.witness_restarts, config.witness_max_iters);
            rec.witness = report.expectation;
            if (!is_entangled(cls.verdict) &&
                report.expectation < 1.0 - kWitnessFloor) {
              result.failures.push_back(
                  "seed " + std::to_string(seed) +
                  ": non-entangled state reached witness expectation only " +
                  std::to_string(report.expectation));
            }
          }
        } catch (const Error& e) {
          rec.verdict = "error";
          rec.error = std::string(error_code_name(e.code())) + ": " + e.what();
          result.failures.push_back("seed " + std::to_string(seed) + ": " +
                                    *rec.error);
        }
        result.records.push_back(std::move(rec));
      }
    }
  }
  return result;
}

void write_jsonl(const SweepResult& result, std::ostream& out) {
  for (const SweepRecord& rec : result.records) {
    out << "{\"seed\": " << rec.seed << ", \"symmetry\": \""
        << to_string(rec.symmetry) << "\", \"dim\": " << rec.dim
        << ", \"verdict\": \"" << rec.verdict << "\", \"rank\": " << rec.rank
        << ", \"entropy\": " << format_double(rec.entropy) << ", \"witness\": ";
    if (rec.witness) {
      out << format_double(*rec.witness);
    } else {
      out << "null";
    }
    out << ", \"residual\": " << format_double(rec.residual);
    if (rec.error) {
      json err = *rec.error;  // JSON string escaping
      out << ", \"error\": " << err.dump();
    }
    out << "}\n";
  }
}

}  // namespace ipent::oracle
