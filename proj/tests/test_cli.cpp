#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "simplexball/cli.hpp"
#include "simplexball/simplex_json.hpp"

using namespace simplexball;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = cli::run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// A file in the temp directory, removed on scope exit.
class TempFile {
 public:
  TempFile(const std::string& name, const std::string& content)
      : path_(fs::temp_directory_path() / ("simplexball_test_" + name)) {
    std::ofstream(path_) << content;
  }
  ~TempFile() { fs::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  fs::path path_;
};

const char* kTriangle = R"({"vertices": [["1","0"],["0","1"],["-1","0"]]})";

}  // namespace

TEST_CASE("simplex JSON parsing") {
  auto exact = parse_simplex_json(kTriangle);
  REQUIRE(std::holds_alternative<Simplex<Rational>>(exact));
  CHECK(std::get<Simplex<Rational>>(exact).vertex(1)[1] == Rational(1));

  auto fl = parse_simplex_json(R"({"vertices": [[1, 0], [0, 1.5], [-1, 0]]})");
  REQUIRE(std::holds_alternative<Simplex<double>>(fl));
  CHECK(std::get<Simplex<double>>(fl).vertex(1)[1] == 1.5);

  CHECK_THROWS_AS(parse_simplex_json("{"), ParseError);
  CHECK_THROWS_AS(parse_simplex_json("[]"), ParseError);
  CHECK_THROWS_AS(parse_simplex_json(R"({"vertices": [[1, "0"], [0, 1], [-1, 0]]})"), ParseError);
  CHECK_THROWS_AS(parse_simplex_json(R"({"vertices": [[1, 0], [0, 1]]})"), ParseError);
  CHECK_THROWS_AS(parse_simplex_json(R"({"vertices": [["1/0", "0"], ["0", "1"], ["-1", "0"]]})"), ParseError);
  CHECK_THROWS_AS(parse_simplex_json(R"({"vertices": [[true, 0], [0, 1], [-1, 0]]})"), ParseError);
  CHECK_THROWS_AS(parse_simplex_json(R"({"vertices": [[0, 0], [1, 1], [2, 2]]})"), DegenerateSimplexError);

  // Round trip and hash stability.
  auto again = parse_simplex_json(simplex_to_json(exact));
  CHECK(std::get<Simplex<Rational>>(again) == std::get<Simplex<Rational>>(exact));
  CHECK(vertices_hash(exact) == vertices_hash(again));
  CHECK(vertices_hash(exact) != vertices_hash(fl));
  CHECK(vertices_hash(exact).size() == 16);
}

TEST_CASE("theta command") {
  auto r = run({"theta", "--max-n", "3", "--format", "csv"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "n,a_n,k_n,tie,psi_a,psi_a1,theta,sqrt_n,sqrt_n1");
  std::string row1;
  std::string row2;
  std::string row3;
  std::getline(lines, row1);
  std::getline(lines, row2);
  std::getline(lines, row3);
  CHECK(row1 == "1,0,0,true,1,1,1,1,1.4142135623730951");
  CHECK(row2 == "2,0,1,false,1,1.6666666666666667,1.6666666666666667,1.4142135623730951,1.7320508075688772");
  CHECK(row3 == "3,1,1,false,2,1.7320508075688772,2,1.7320508075688772,2");

  auto j = run({"theta", "--max-n", "2", "--format", "json"});
  CHECK(j.code == 0);
  auto rows = nlohmann::json::parse(j.out);
  CHECK(rows.size() == 2);
  CHECK(rows[1]["k_n"] == 1);

  CHECK(run({"theta", "--format", "xml"}).code == cli::kUsage);
  CHECK(run({"theta", "--min-n", "0"}).code == cli::kUsage);
  CHECK(run({"theta", "--max-n", "abc"}).code == cli::kUsage);
}

TEST_CASE("faces command on the worked triangle") {
  TempFile tri("tri.json", kTriangle);
  auto r = run({"faces", "--input", tri.path(), "--dim", "0"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["mode"] == "exact");
  REQUIRE(j["dimensions"].size() == 1);
  const auto& d0 = j["dimensions"][0];
  CHECK(d0["dim"] == 0);
  CHECK(d0["count"] == 1);
  REQUIRE(d0["suitable_faces"].size() == 1);
  CHECK(d0["suitable_faces"][0]["indices"] == nlohmann::json::array({2}));
  CHECK(d0["suitable_faces"][0]["norm_sq_exact"] == "1/9");
  CHECK(j["theorem1_holds"] == true);

  auto all = run({"faces", "--input", tri.path()});
  CHECK(all.code == 0);
  CHECK(nlohmann::json::parse(all.out)["dimensions"].size() == 2);

  TempFile ftri("ftri.json", R"({"vertices": [[1, 0], [0, 1], [-1, 0]]})");
  auto f = run({"faces", "--input", ftri.path(), "--dim", "0"});
  CHECK(f.code == 0);
  CHECK(nlohmann::json::parse(f.out)["mode"] == "float");
  auto fe = run({"faces", "--input", ftri.path(), "--dim", "0", "--exact"});
  CHECK(nlohmann::json::parse(fe.out)["mode"] == "exact");

  CHECK(run({"faces", "--input", tri.path(), "--dim", "2"}).code == cli::kUsage);
}

TEST_CASE("ellipsoid command") {
  TempFile tri("tri_e.json", kTriangle);
  auto r = run({"ellipsoid", "--input", tri.path()});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["center"] == nlohmann::json::array({"0", "1/3"}));
  CHECK(j["shape"][0][0] == "3/4");
  CHECK(j["shape"][1][1] == "9/4");
  CHECK(j["volume"].get<double>() == doctest::Approx(2.4183991523122903));

  auto o = run({"ellipsoid", "--input", tri.path(), "--oracle"});
  REQUIRE(o.code == 0);
  auto oj = nlohmann::json::parse(o.out);
  CHECK(oj["oracle"]["center_distance"].get<double>() <= 1e-5);
  CHECK(oj["oracle"]["relative_volume_gap"].get<double>() <= 1e-4);
}

TEST_CASE("exit codes") {
  TempFile bad("bad.json", "{ not json");
  TempFile mixed("mixed.json", R"({"vertices": [[1, "0"], [0, 1], [-1, 0]]})");
  TempFile flat("flat.json", R"({"vertices": [[0, 0], [1, 1], [2, 2]]})");
  CHECK(run({"faces", "--input", bad.path()}).code == 64);
  CHECK(run({"faces", "--input", mixed.path()}).code == 64);
  CHECK(run({"ellipsoid", "--input", flat.path()}).code == 65);
  CHECK(run({"faces", "--input", flat.path()}).code == 65);
  CHECK(run({"faces", "--input", (fs::temp_directory_path() / "simplexball_missing.json").string()}).code == 66);
  CHECK(run({}).code == 64);
  CHECK(run({"bogus"}).code == 64);
  CHECK(run({"verify"}).code == 64);
  CHECK(run({"explore", "--n", "4", "--m", "3", "--d", "3"}).code == 64);
  CHECK(run({"verify", "--n", "3", "--mode", "sphere"}).code == 64);
  auto bad_out = run({"explore", "--n", "4", "--m", "1", "--d", "2", "--trials", "2", "--output",
                      "/nonexistent-dir/records.jsonl"});
  CHECK(bad_out.code == 74);
}

TEST_CASE("verify is deterministic") {
  auto a = run({"verify", "--n", "3", "--trials", "100", "--seed", "42"});
  auto b = run({"verify", "--n", "3", "--trials", "100", "--seed", "42"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.err == b.err);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["status"] == "clean");
  CHECK(j["suites"].size() == 2);
}

TEST_CASE("explore writes JSONL and a summary") {
  const auto path = (fs::temp_directory_path() / "simplexball_explore.jsonl").string();
  auto r = run({"explore", "--n", "4", "--m", "1", "--d", "2", "--trials", "10", "--seed", "1", "--output", path,
                "--threads", "2"});
  CHECK(r.code == 0);
  auto summary = nlohmann::json::parse(r.out);
  CHECK(summary["trials_run"] == 10);
  std::ifstream in(path);
  std::string first((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto again = run({"explore", "--n", "4", "--m", "1", "--d", "2", "--trials", "10", "--seed", "1", "--output", path,
                    "--threads", "1"});
  CHECK(again.code == 0);
  std::ifstream in2(path);
  std::string second((std::istreambuf_iterator<char>(in2)), std::istreambuf_iterator<char>());
  CHECK(first == second);
  CHECK(std::count(first.begin(), first.end(), '\n') == 10);
  fs::remove(path);
}
