// ipent command-line front end. Links the public C API only.
//
// Subcommands:
//   classify  PATH [--witness] [--json]
//   decompose PATH [--json]
//   generate  --kind K --dim D [--seed N | --vectors FILE] --out PATH
//   sweep     --config PATH [--out PATH]
//
// Exit codes: classify returns 0 for a non-entangled state, 1 for an
// entangled one and 2 on any error or classification conflict; sweep
// returns 1 when an invariant fails; everything else uses 0/2.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ipent.h"

namespace {

constexpr int kExitNonEntangled = 0;
constexpr int kExitEntangled = 1;
constexpr int kExitError = 2;

std::string fmt(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

int report_error(ipent_status status) {
  std::cerr << "error: " << ipent_status_name(status) << ": "
            << ipent_last_error() << '\n';
  return kExitError;
}

struct StateHandle {
  ipent_state* ptr = nullptr;
  ~StateHandle() { ipent_state_free(ptr); }
};

struct DecompositionHandle {
  ipent_decomposition* ptr = nullptr;
  ~DecompositionHandle() { ipent_decomposition_free(ptr); }
};

std::string witness_json(const ipent_witness_report& report,
                         const std::vector<double>& v) {
  std::ostringstream out;
  out << "{\"expectation\": " << fmt(report.expectation) << ", \"vector\": [";
  for (std::size_t k = 0; k + 1 < v.size(); k += 2) {
    out << '[' << fmt(v[k]) << ", " << fmt(v[k + 1]) << ']';
    if (k + 2 < v.size()) out << ", ";
  }
  out << "], \"iterations\": " << report.iterations
      << ", \"restarts\": " << report.restarts_used << '}';
  return out.str();
}

int cmd_classify(const std::string& path, bool with_witness, bool as_json,
                 std::uint64_t seed) {
  StateHandle state;
  ipent_status st = ipent_state_load(path.c_str(), &state.ptr);
  if (st != IPENT_OK) return report_error(st);

  ipent_classification cls{};
  st = ipent_classify(state.ptr, &cls);
  if (st != IPENT_OK) return report_error(st);

  const bool entangled = cls.verdict == IPENT_VERDICT_ENTANGLED;
  const int dim = ipent_state_dim(state.ptr);
  const ipent_symmetry sym = ipent_state_symmetry(state.ptr);

  ipent_witness_report witness{};
  std::vector<double> witness_vec(2 * static_cast<std::size_t>(dim), 0.0);
  if (with_witness) {
    st = ipent_witness_search(state.ptr, seed, 8, 500, witness_vec.data(),
                              &witness);
    if (st != IPENT_OK) return report_error(st);
  }

  if (as_json) {
    std::ostringstream out;
    out << "{\"path\": " << nlohmann::json(path).dump() << ", \"dim\": " << dim
        << ", \"symmetry\": \"" << ipent_symmetry_name(sym)
        << "\", \"verdict\": \"" << ipent_verdict_name(cls.verdict)
        << "\", \"entangled\": " << (entangled ? "true" : "false")
        << ", \"rank\": " << cls.rank
        << ", \"entropy_bits\": " << fmt(cls.entropy_bits);
    if (with_witness) out << ", \"witness\": " << witness_json(witness, witness_vec);
    out << '}';
    std::cout << out.str() << '\n';
  } else {
    const char* number_name =
        sym == IPENT_SYMMETRY_FERMION ? "Slater number" : "Schmidt number";
    std::printf("%s (%s %d, S=%.6f)\n",
                entangled ? "entangled" : "non-entangled", number_name,
                cls.rank, cls.entropy_bits);
    if (with_witness) {
      std::printf("witness: expectation=%.12f restarts=%d iterations=%d\n",
                  witness.expectation, witness.restarts_used,
                  witness.iterations);
    }
  }
  return entangled ? kExitEntangled : kExitNonEntangled;
}

int cmd_decompose(const std::string& path, bool as_json) {
  StateHandle state;
  ipent_status st = ipent_state_load(path.c_str(), &state.ptr);
  if (st != IPENT_OK) return report_error(st);

  DecompositionHandle dec;
  st = ipent_decompose(state.ptr, &dec.ptr);
  if (st != IPENT_OK) return report_error(st);

  const int count = ipent_decomposition_count(dec.ptr);
  std::vector<double> values(static_cast<std::size_t>(count), 0.0);
  st = ipent_decomposition_values(dec.ptr, values.data());
  if (st != IPENT_OK) return report_error(st);

  if (as_json) {
    std::ostringstream out;
    out << "{\"kind\": \"" << ipent_decomposition_kind(dec.ptr)
        << "\", \"coefficients\": [";
    for (int k = 0; k < count; ++k) {
      out << fmt(values[static_cast<std::size_t>(k)]);
      if (k + 1 < count) out << ", ";
    }
    out << "], \"effective_rank\": " << ipent_decomposition_rank(dec.ptr)
        << ", \"residual\": " << fmt(ipent_decomposition_residual(dec.ptr))
        << ", \"near_threshold\": "
        << (ipent_decomposition_near_threshold(dec.ptr) ? "true" : "false")
        << '}';
    std::cout << out.str() << '\n';
  } else {
    std::printf("kind: %s\n", ipent_decomposition_kind(dec.ptr));
    std::printf("coefficients:");
    for (int k = 0; k < count; ++k) {
      std::printf(" %.12f", values[static_cast<std::size_t>(k)]);
    }
    std::printf("\n");
    std::printf("effective rank: %d\n", ipent_decomposition_rank(dec.ptr));
    std::printf("reconstruction residual: %.3e\n",
                ipent_decomposition_residual(dec.ptr));
    if (ipent_decomposition_near_threshold(dec.ptr)) {
      std::printf("warning: coefficients close to the rank threshold\n");
    }
  }
  return 0;
}

// Vector/coefficient payload for `generate --vectors FILE`:
//   product kinds:  {"phi": [[re,im], ...], "chi": [[re,im], ...]}
//   form kinds:     {"coefficients": [c1, c2, ...]}
bool read_vector_field(const nlohmann::json& doc, const char* field,
                       std::vector<double>& out) {
  if (!doc.contains(field) || !doc[field].is_array()) return false;
  out.clear();
  for (const auto& entry : doc[field]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number()) {
      return false;
    }
    out.push_back(entry[0].get<double>());
    out.push_back(entry[1].get<double>());
  }
  return !out.empty();
}

int cmd_generate(const std::string& kind, int dim, std::uint64_t seed,
                 bool have_seed, const std::string& vectors_path,
                 const std::string& out_path) {
  StateHandle state;
  ipent_status st = IPENT_OK;

  nlohmann::json vectors;
  const bool needs_vectors = kind == "antisym-product" ||
                             kind == "sym-product" || kind == "same-product" ||
                             kind == "slater-form" || kind == "schmidt-form";
  if (needs_vectors) {
    if (vectors_path.empty()) {
      std::cerr << "error: kind '" << kind << "' requires --vectors FILE\n";
      return kExitError;
    }
    std::ifstream in(vectors_path);
    if (!in) {
      std::cerr << "error: cannot open vectors file '" << vectors_path << "'\n";
      return kExitError;
    }
    try {
      vectors = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      std::cerr << "error: " << vectors_path << ": " << e.what() << '\n';
      return kExitError;
    }
  }

  if (kind == "antisym-product" || kind == "sym-product" ||
      kind == "same-product") {
    std::vector<double> phi;
    std::vector<double> chi;
    if (!read_vector_field(vectors, "phi", phi)) {
      std::cerr << "error: vectors file needs a 'phi' array of [re, im] pairs\n";
      return kExitError;
    }
    if (kind == "same-product") {
      chi = phi;
    } else if (!read_vector_field(vectors, "chi", chi)) {
      std::cerr << "error: vectors file needs a 'chi' array of [re, im] pairs\n";
      return kExitError;
    }
    if (chi.size() != phi.size()) {
      std::cerr << "error: phi and chi must have the same dimension\n";
      return kExitError;
    }
    const int d = static_cast<int>(phi.size() / 2);
    if (dim != 0 && dim != d) {
      std::cerr << "error: --dim disagrees with the vectors file\n";
      return kExitError;
    }
    st = kind == "antisym-product"
             ? ipent_state_antisymmetrized_product(d, phi.data(), chi.data(),
                                                   &state.ptr)
             : ipent_state_symmetrized_product(d, phi.data(), chi.data(),
                                               &state.ptr);
  } else if (kind == "slater-form" || kind == "schmidt-form") {
    if (!vectors.contains("coefficients") ||
        !vectors["coefficients"].is_array() ||
        vectors["coefficients"].empty()) {
      std::cerr << "error: vectors file needs a 'coefficients' array\n";
      return kExitError;
    }
    std::vector<double> coeffs;
    for (const auto& c : vectors["coefficients"]) {
      if (!c.is_number()) {
        std::cerr << "error: coefficients must be numbers\n";
        return kExitError;
      }
      coeffs.push_back(c.get<double>());
    }
    if (dim == 0) {
      std::cerr << "error: kind '" << kind << "' requires --dim\n";
      return kExitError;
    }
    st = kind == "slater-form"
             ? ipent_state_slater_form(dim, coeffs.data(),
                                       static_cast<int>(coeffs.size()),
                                       &state.ptr)
             : ipent_state_schmidt_form(dim, coeffs.data(),
                                        static_cast<int>(coeffs.size()),
                                        &state.ptr);
  } else if (kind == "random-fermion" || kind == "random-boson") {
    if (dim == 0) {
      std::cerr << "error: kind '" << kind << "' requires --dim\n";
      return kExitError;
    }
    if (!have_seed) {
      std::cerr << "error: kind '" << kind << "' requires --seed\n";
      return kExitError;
    }
    st = ipent_state_random(kind == "random-fermion" ? IPENT_SYMMETRY_FERMION
                                                     : IPENT_SYMMETRY_BOSON,
                            dim, seed, &state.ptr);
  } else {
    std::cerr << "error: unknown kind '" << kind
              << "' (expected antisym-product, sym-product, same-product, "
                 "random-fermion, random-boson, slater-form or schmidt-form)\n";
    return kExitError;
  }

  if (st != IPENT_OK) return report_error(st);
  st = ipent_state_save(state.ptr, out_path.c_str());
  if (st != IPENT_OK) return report_error(st);
  return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& out_path) {
  int failures = 0;
  const ipent_status st = ipent_sweep_run(
      config_path.c_str(), out_path.empty() ? nullptr : out_path.c_str(),
      &failures);
  if (st != IPENT_OK) return report_error(st);
  if (failures > 0) {
    std::cerr << failures << " invariant failure(s)\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement analysis for pure states of two identical "
               "particles"};
  app.set_version_flag("--version", std::string(ipent_version()));
  app.require_subcommand(1);

  std::string classify_path;
  bool classify_witness = false;
  bool classify_json = false;
  std::uint64_t classify_seed = 1;
  auto* classify =
      app.add_subcommand("classify", "Decide whether a state is entangled");
  classify->add_option("path", classify_path, "State file (JSON)")->required();
  classify->add_flag("--witness", classify_witness,
                     "Also search for a property-attribution certificate");
  classify->add_flag("--json", classify_json, "Machine-readable output");
  classify->add_option("--seed", classify_seed,
                       "Seed for the witness search (default 1)");

  std::string decompose_path;
  bool decompose_json = false;
  auto* decompose = app.add_subcommand(
      "decompose", "Print the canonical decomposition of a state");
  decompose->add_option("path", decompose_path, "State file (JSON)")->required();
  decompose->add_flag("--json", decompose_json, "Machine-readable output");

  std::string gen_kind;
  int gen_dim = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_vectors;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write a state file");
  generate->add_option("--kind", gen_kind,
                       "antisym-product | sym-product | same-product | "
                       "random-fermion | random-boson | slater-form | "
                       "schmidt-form")
      ->required();
  generate->add_option("--dim", gen_dim, "Single-particle dimension");
  auto* seed_opt = generate->add_option("--seed", gen_seed, "Random seed");
  generate->add_option("--vectors", gen_vectors,
                       "JSON file with phi/chi vectors or coefficients");
  generate->add_option("--out", gen_out, "Output state file")->required();

  std::string sweep_config;
  std::string sweep_out;
  auto* sweep =
      app.add_subcommand("sweep", "Run the seeded verification sweep");
  sweep->add_option("--config", sweep_config, "Sweep config (JSON)")->required();
  sweep->add_option("--out", sweep_out, "Report file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  if (classify->parsed()) {
    return cmd_classify(classify_path, classify_witness, classify_json,
                        classify_seed);
  }
  if (decompose->parsed()) {
    return cmd_decompose(decompose_path, decompose_json);
  }
  if (generate->parsed()) {
    return cmd_generate(gen_kind, gen_dim, gen_seed, seed_opt->count() > 0,
                        gen_vectors, gen_out);
  }
  if (sweep->parsed()) {
    return cmd_sweep(sweep_config, sweep_out);
  }
  return kExitError;
}
