#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "asymcont/io.hpp"
#include "asymcont/states.hpp"
#include "support.hpp"

using namespace asymcont;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "asymcont_io_test";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("state files round-trip bit for bit") {
  testing::Gen g(51);
  const fs::path path = scratch_dir() / "state.json";
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = g.density(2, 3);
    write_state_file(path, rho);
    const DensityMatrix back = read_state_file(path);
    CHECK(back.dim_a() == 2);
    CHECK(back.dim_b() == 3);
    CHECK(back.matrix() == rho.matrix());
  }
}

TEST_CASE("state documents are validated") {
  json doc = state_to_json(phi_plus().projector());
  CHECK_NOTHROW(state_from_json(doc));

  json wrong_rows = doc;
  wrong_rows["entries"].erase(0);
  CHECK_THROWS_AS(state_from_json(wrong_rows), FormatError);

  json wrong_pair = doc;
  wrong_pair["entries"][0][0] = json::array({1.0});
  CHECK_THROWS_AS(state_from_json(wrong_pair), FormatError);

  json missing = doc;
  missing.erase("dim_b");
  CHECK_THROWS_AS(state_from_json(missing), FormatError);

  json zero_dim = doc;
  zero_dim["dim_a"] = 0;
  CHECK_THROWS_AS(state_from_json(zero_dim), FormatError);

  json scaled = doc;
  for (auto& row : scaled["entries"])
    for (auto& cell : row) cell[0] = cell[0].get<double>() * 0.9;
  CHECK_THROWS_AS(state_from_json(scaled), InvalidState);
  const DensityMatrix forced = state_from_json(scaled, true);
  const Diagnostics d = validate(2, 2, forced.matrix());
  CHECK_FALSE(d.pass);
  CHECK(d.trace_defect == doctest::Approx(0.1).epsilon(1e-12));

  const fs::path garbage = scratch_dir() / "garbage.json";
  std::ofstream(garbage) << "{\"dim_a\": 2";
  CHECK_THROWS_AS(read_state_file(garbage), FormatError);
  CHECK_THROWS_AS(read_state_file(scratch_dir() / "does_not_exist.json"), FormatError);
}

TEST_CASE("measure records") {
  const json j = to_json(MeasureValue{0.25, BoundKind::upper_bound, "eof_upper_general"});
  CHECK(j["value"] == 0.25);
  CHECK(j["kind"] == "upper_bound");
  CHECK(j["method"] == "eof_upper_general");
  CHECK(to_string(BoundKind::lower_bound) == "lower_bound");
  CHECK(to_string(BoundKind::exact) == "exact");
}

TEST_CASE("CSV and number formatting") {
  const Table t{{"n", "value"}, {{1.0, 0.1}, {2.0, 1.0 / 3.0}}};
  CHECK(to_csv(t, {"seed: 3"}) == "# seed: 3\nn,value\n1,0.1\n2,0.3333333333333333\n");
  for (double x : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 6.02214076e23}) {
    CHECK(std::stod(format_double(x)) == x);
  }
}

TEST_CASE("atomic writes replace the target") {
  const fs::path path = scratch_dir() / "atomic.txt";
  write_file_atomic(path, "first");
  write_file_atomic(path, "second");
  CHECK(slurp(path) == "second");
  for (const auto& entry : fs::directory_iterator(scratch_dir())) {
    CHECK(entry.path().filename().string().find(".tmp") == std::string::npos);
  }
}
