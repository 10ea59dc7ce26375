#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "ipent.h"

namespace {

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

struct State {
  ipent_state* ptr = nullptr;
  ~State() { ipent_state_free(ptr); }
};

// Singlet through the C layout: phi = e1, chi = e2, antisymmetrized.
ipent_status make_singlet(ipent_state** out) {
  const double phi[4] = {1.0, 0.0, 0.0, 0.0};
  const double chi[4] = {0.0, 0.0, 1.0, 0.0};
  return ipent_state_antisymmetrized_product(2, phi, chi, out);
}

}  // namespace

TEST_CASE("version and status names are stable strings") {
  CHECK(std::strlen(ipent_version()) > 0);
  CHECK(std::string(ipent_status_name(IPENT_OK)) == "ok");
  CHECK(std::string(ipent_status_name(IPENT_ERR_PARSE)) == "parse-error");
  CHECK(std::string(ipent_symmetry_name(IPENT_SYMMETRY_FERMION)) == "fermion");
  CHECK(std::string(ipent_verdict_name(IPENT_VERDICT_ENTANGLED)) == "entangled");
}

TEST_CASE("singlet pipeline through the C API") {
  State s;
  REQUIRE(make_singlet(&s.ptr) == IPENT_OK);
  CHECK(ipent_state_dim(s.ptr) == 2);
  CHECK(ipent_state_symmetry(s.ptr) == IPENT_SYMMETRY_FERMION);

  double reim[8] = {0};
  REQUIRE(ipent_state_coefficients(s.ptr, reim) == IPENT_OK);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(reim[2] - inv_sqrt2) <= 1e-15);   // (0,1) real part
  CHECK(std::abs(reim[4] + inv_sqrt2) <= 1e-15);   // (1,0) real part

  ipent_classification cls{};
  REQUIRE(ipent_classify(s.ptr, &cls) == IPENT_OK);
  CHECK(cls.verdict == IPENT_VERDICT_NON_ENTANGLED_SLATER_ONE);
  CHECK(cls.rank == 1);
  CHECK(std::abs(cls.entropy_bits - 1.0) <= 1e-10);

  ipent_decomposition* dec = nullptr;
  REQUIRE(ipent_decompose(s.ptr, &dec) == IPENT_OK);
  CHECK(std::string(ipent_decomposition_kind(dec)) == "slater");
  CHECK(ipent_decomposition_rank(dec) == 1);
  REQUIRE(ipent_decomposition_count(dec) == 1);
  double value = 0.0;
  REQUIRE(ipent_decomposition_values(dec, &value) == IPENT_OK);
  CHECK(std::abs(value - 1.0) <= 1e-12);
  CHECK(ipent_decomposition_residual(dec) <= 1e-12);
  CHECK(ipent_decomposition_near_threshold(dec) == 0);
  ipent_decomposition_free(dec);

  double probe[4] = {1.0, 0.0, 0.0, 0.0};
  double expectation = 0.0;
  REQUIRE(ipent_witness_expectation(s.ptr, probe, &expectation) == IPENT_OK);
  CHECK(std::abs(expectation - 1.0) <= 1e-12);

  double best[4] = {0};
  ipent_witness_report report{};
  REQUIRE(ipent_witness_search(s.ptr, 1, 4, 100, best, &report) == IPENT_OK);
  CHECK(report.expectation >= 1.0 - 1e-10);
  CHECK(report.restarts_used == 4);
}

TEST_CASE("save and load round-trip through the C API") {
  State s;
  REQUIRE(make_singlet(&s.ptr) == IPENT_OK);
  const auto path = temp_file("ipent_capi_state.json");
  REQUIRE(ipent_state_save(s.ptr, path.string().c_str()) == IPENT_OK);

  State loaded;
  REQUIRE(ipent_state_load(path.string().c_str(), &loaded.ptr) == IPENT_OK);
  double a[8] = {0};
  double b[8] = {0};
  REQUIRE(ipent_state_coefficients(s.ptr, a) == IPENT_OK);
  REQUIRE(ipent_state_coefficients(loaded.ptr, b) == IPENT_OK);
  for (int k = 0; k < 8; ++k) CHECK(a[k] == b[k]);

  double re = 0.0;
  double im = 0.0;
  REQUIRE(ipent_state_inner_product(s.ptr, loaded.ptr, &re, &im) == IPENT_OK);
  CHECK(std::abs(re - 1.0) <= 1e-14);
  CHECK(std::abs(im) <= 1e-14);
  std::filesystem::remove(path);
}

TEST_CASE("errors carry specific statuses and messages") {
  State s;
  CHECK(ipent_state_load("/nonexistent/state.json", &s.ptr) == IPENT_ERR_IO);
  CHECK(std::strlen(ipent_last_error()) > 0);

  // Parallel vectors.
  const double phi[4] = {1.0, 0.0, 0.0, 0.0};
  CHECK(ipent_state_antisymmetrized_product(2, phi, phi, &s.ptr) ==
        IPENT_ERR_PARALLEL_VECTORS);

  // Declared fermion with symmetric entries.
  const double sym[8] = {0, 0, 1, 0, 1, 0, 0, 0};
  CHECK(ipent_state_from_coefficients(2, sym, IPENT_SYMMETRY_FERMION, &s.ptr) ==
        IPENT_ERR_SYMMETRY_VIOLATION);

  // Null arguments.
  CHECK(ipent_state_from_coefficients(2, nullptr, IPENT_SYMMETRY_BOSON,
                                      &s.ptr) == IPENT_ERR_INVALID_ARGUMENT);

  // Near-threshold classification conflict surfaces through the API.
  const double b[2] = {1.0, 1.5e-5};
  State conflicted;
  REQUIRE(ipent_state_schmidt_form(2, b, 2, &conflicted.ptr) == IPENT_OK);
  ipent_classification cls{};
  CHECK(ipent_classify(conflicted.ptr, &cls) ==
        IPENT_ERR_CLASSIFICATION_CONFLICT);
}

TEST_CASE("builder functions match their explicit forms") {
  const double a[2] = {1.0, 1.0};
  State slater;
  REQUIRE(ipent_state_slater_form(4, a, 2, &slater.ptr) == IPENT_OK);
  ipent_classification cls{};
  REQUIRE(ipent_classify(slater.ptr, &cls) == IPENT_OK);
  CHECK(cls.verdict == IPENT_VERDICT_ENTANGLED);
  CHECK(cls.rank == 2);
  CHECK(std::abs(cls.entropy_bits - 2.0) <= 1e-10);

  const double b[2] = {std::sqrt(0.8), std::sqrt(0.2)};
  State schmidt;
  REQUIRE(ipent_state_schmidt_form(2, b, 2, &schmidt.ptr) == IPENT_OK);
  REQUIRE(ipent_classify(schmidt.ptr, &cls) == IPENT_OK);
  CHECK(cls.verdict == IPENT_VERDICT_ENTANGLED);
  CHECK(std::abs(cls.entropy_bits - 0.721928) <= 1e-6);

  State random1;
  State random2;
  REQUIRE(ipent_state_random(IPENT_SYMMETRY_BOSON, 3, 42, &random1.ptr) ==
          IPENT_OK);
  REQUIRE(ipent_state_random(IPENT_SYMMETRY_BOSON, 3, 42, &random2.ptr) ==
          IPENT_OK);
  double r1[18] = {0};
  double r2[18] = {0};
  REQUIRE(ipent_state_coefficients(random1.ptr, r1) == IPENT_OK);
  REQUIRE(ipent_state_coefficients(random2.ptr, r2) == IPENT_OK);
  for (int k = 0; k < 18; ++k) CHECK(r1[k] == r2[k]);
}

TEST_CASE("sweep runs through the C API") {
  const auto config_path = temp_file("ipent_capi_sweep.json");
  const auto report_path = temp_file("ipent_capi_sweep.jsonl");
  {
    std::ofstream out(config_path);
    out << R"({"classes": ["fermion", "boson"], "dims": [2, 3], "count": 4,
               "seed": 11, "witness": false})";
  }
  int failures = -1;
  REQUIRE(ipent_sweep_run(config_path.string().c_str(),
                          report_path.string().c_str(),
                          &failures) == IPENT_OK);
  CHECK(failures == 0);

  std::ifstream in(report_path);
  std::size_t lines = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) ++lines;
  }
  CHECK(lines == 2u * 2u * 4u);

  CHECK(ipent_sweep_run("/nonexistent/config.json", nullptr, &failures) ==
        IPENT_ERR_IO);
  std::filesystem::remove(config_path);
  std::filesystem::remove(report_path);
}
