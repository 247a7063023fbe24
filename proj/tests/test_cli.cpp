#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "cyclerep/cli.hpp"
#include "cyclerep/document.hpp"

using namespace cyclerep;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "cyclerep");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CYCLEREP_TEST_DATA) + "/" + name; }

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("cyclerep_cli_" + std::to_string(::getpid()))) { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
  [[nodiscard]] std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("validate") {
  CHECK(run({"validate", data("chain_5_2_8.json")}).code == cli::kOk);
  const auto bad = run({"validate", data("bad_shape.json")});
  CHECK(bad.code == cli::kInvalid);
  CHECK(bad.err.find("vertex 1") != std::string::npos);
  const auto rat = run({"validate", data("bad_rational.json")});
  CHECK(rat.code == cli::kInvalid);
  CHECK(rat.err.find("1/0") != std::string::npos);
  CHECK(run({"validate", data("missing.json")}).code == cli::kInvalid);
  CHECK(run({"validate"}).code == cli::kInvalid);
  CHECK(run({"frobnicate"}).code == cli::kInvalid);
}

TEST_CASE("decompose") {
  TempDir tmp;
  const auto r = run({"decompose", data("chain_5_2_8.json"), "--out", tmp / "report.json", "--verify"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.find("end 2, length 8, x1") != std::string::npos);
  const Json rep = read_json_file(tmp / "report.json");
  CHECK(rep["chains"] == Json::parse(R"([{"end":2,"len":8,"mult":1}])"));
  CHECK(rep["regular_dims"] == Json::parse("[0,0,0,0,0]"));

  const auto reg = run({"decompose", data("regular.json"), "--out", tmp / "reg.json"});
  REQUIRE(reg.code == cli::kOk);
  const Json rr = read_json_file(tmp / "reg.json");
  CHECK(rr["chains"].empty());
  CHECK(rr["invariant_factors"].size() == 1);

  CHECK(run({"decompose", data("empty.json")}).code == cli::kOk);
  CHECK(run({"decompose", data("gaussian.json"), "--verify"}).code == cli::kOk);
  CHECK(run({"decompose", data("chain_5_2_8.json"), "--jmax", "3"}).code == cli::kInvalid);
  CHECK(run({"decompose", data("bad_shape.json")}).code == cli::kInvalid);
}

TEST_CASE("gen, compare and check-witness") {
  TempDir tmp;
  REQUIRE(run({"gen", "--t", "5", "--chains", "2:8:1", "--seed", "7", "--out", tmp / "a.json"}).code == cli::kOk);
  REQUIRE(run({"gen", "--t", "5", "--chains", "2:8:1", "--seed", "7", "--out", tmp / "a2.json"}).code == cli::kOk);
  CHECK(slurp(tmp / "a.json") == slurp(tmp / "a2.json"));
  REQUIRE(run({"gen", "--t", "5", "--chains", "2:8", "--seed", "8", "--out", tmp / "b.json"}).code == cli::kOk);
  const auto d = run({"decompose", tmp / "a.json", "--out", tmp / "a_rep.json"});
  REQUIRE(d.code == cli::kOk);
  CHECK(read_json_file(tmp / "a_rep.json")["chains"] == Json::parse(R"([{"end":2,"len":8,"mult":1}])"));

  const auto iso = run({"compare", tmp / "a.json", tmp / "b.json", "--mode", "iso", "--witness-out", tmp / "w.json"});
  CHECK(iso.code == cli::kOk);
  CHECK(run({"check-witness", tmp / "a.json", tmp / "b.json", tmp / "w.json"}).code == cli::kOk);

  Json w = read_json_file(tmp / "w.json");
  w["phis"][1][0][0] = "12345/7";
  write_json_file(tmp / "bad_w.json", w);
  const auto rej = run({"check-witness", tmp / "a.json", tmp / "b.json", tmp / "bad_w.json"});
  CHECK(rej.code == cli::kFalse);
  CHECK(rej.out.find("square") != std::string::npos);

  REQUIRE(run({"gen", "--t", "5", "--chains", "3:8", "--out", tmp / "c.json"}).code == cli::kOk);
  CHECK(run({"compare", tmp / "a.json", tmp / "c.json"}).code == cli::kFalse);
  const auto topo = run({"compare", tmp / "a.json", tmp / "c.json", "--mode", "topo", "--out", tmp / "topo.json"});
  CHECK(topo.code == cli::kFalse);
  CHECK(read_json_file(tmp / "topo.json")["verdict"] == "NotEquivalent");
  CHECK(run({"compare", tmp / "a.json", tmp / "b.json", "--mode", "topo"}).code == cli::kOk);

  REQUIRE(run({"gen", "--t", "1", "--regular-size", "2", "--out", tmp / "r.json"}).code == cli::kOk);
  CHECK(run({"validate", tmp / "r.json"}).code == cli::kOk);
  REQUIRE(run({"gen", "--t", "1", "--regular-size", "2", "--seed", "3", "--out", tmp / "r3.json"}).code == cli::kOk);
  const auto pair = run({"compare", tmp / "r.json", tmp / "r3.json", "--mode", "topo"});
  CHECK((pair.code == cli::kUndecided || pair.code == cli::kOk));

  CHECK(run({"check-witness", data("chain_5_2_8.json"), data("chain_5_2_8.json"), tmp / "w.json"}).code == cli::kFalse);
  CHECK(run({"gen", "--t", "2", "--chains", "3:1"}).code == cli::kInvalid);
  CHECK(run({"gen", "--t", "2", "--chains", "x"}).code == cli::kInvalid);
  CHECK(run({"gen", "--t", "2", "--chains", "1:2", "--field", "Q(i)", "--out", tmp / "g.json"}).code == cli::kOk);
  CHECK(run({"compare", tmp / "g.json", tmp / "a.json"}).code == cli::kInvalid);
}

TEST_CASE("chain list parsing") {
  const auto c = cli::parse_chain_list("2:8:1,1:0,3:2:4", 3);
  CHECK(c == std::vector<ChainSummand>{{2, 8, 1}, {1, 0, 1}, {3, 2, 4}});
  CHECK(cli::parse_chain_list("", 3).empty());
  CHECK_THROWS_AS(cli::parse_chain_list("1", 3), InvalidInput);
  CHECK_THROWS_AS(cli::parse_chain_list("1:2:0", 3), InvalidInput);
  CHECK_THROWS_AS(cli::parse_chain_list("0:2", 3), InvalidInput);
}

TEST_CASE("gen then decompose recovers the spec") {
  TempDir tmp;
  std::mt19937_64 rng(200);
  for (int n = 0; n < 200; ++n) {
    const std::size_t t = 1 + rng() % 5;
    std::string chains;
    std::vector<ChainSummand> expect;
    const std::size_t count = rng() % 4;
    for (std::size_t k = 0; k < count; ++k) {
      const ChainSummand c{1 + rng() % t, rng() % 6, 1 + rng() % 2};
      chains += (k ? "," : "") + std::to_string(c.end_vertex) + ":" + std::to_string(c.length) + ":" + std::to_string(c.multiplicity);
      expect.push_back(c);
    }
    const std::size_t reg = rng() % 3;
    const auto seed = std::to_string(rng() % 100000);
    REQUIRE(run({"gen", "--t", std::to_string(t), "--chains", chains, "--regular-size", std::to_string(reg), "--seed", seed,
                 "--out", tmp / "g.json"})
                .code == cli::kOk);
    REQUIRE(run({"decompose", tmp / "g.json", "--out", tmp / "g_rep.json"}).code == cli::kOk);
    const Json rep = read_json_file(tmp / "g_rep.json");
    CHECK(rep["chains"] == chains_to_json(normalize_chains(expect)));
    CHECK(rep["regular_dims"] == Json(std::vector<std::size_t>(t, reg)));
  }
}
