#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "macut/cli.hpp"
#include "macut/serialize.hpp"
#include "support.hpp"

using namespace macut;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "macut_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

void write_file(const fs::path& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("tokenize and parse_input") {
  const auto tokens = cli::tokenize({"cut-vertex", "(polygon", "4)", "0"});
  CHECK(tokens == std::vector<std::string>{"cut-vertex", "(", "polygon", "4", ")", "0"});
  std::size_t pos = 0;
  const auto in = cli::parse_input(tokens, pos);
  CHECK(pos == tokens.size());
  REQUIRE(in.polytope());
  CHECK(macut::testing::isomorphic(*in.polytope(), polygon(5)));

  pos = 0;
  const auto nested = cli::parse_input(cli::tokenize({"product (simplex 1) (product (simplex 1) (simplex 1))"}), pos);
  REQUIRE(nested.polytope());
  CHECK(macut::testing::isomorphic(*nested.polytope(), cube(3)));

  pos = 0;
  CHECK_THROWS_AS(cli::parse_input({"hexagon", "1"}, pos), cli::UsageError);
  pos = 0;
  CHECK_THROWS_AS(cli::parse_input({"polygon", "x"}, pos), cli::UsageError);
  pos = 0;
  CHECK_THROWS_AS(cli::parse_input({"polygon"}, pos), cli::UsageError);
}

TEST_CASE("build") {
  const auto pentagon = run_cli({"build", "polygon", "5"});
  CHECK(pentagon.code == cli::kSuccess);
  const auto j = Json::parse(pentagon.out);
  CHECK(j["schema"] == 1);
  CHECK(j["dim"] == 2);
  CHECK(j["facets"] == 5);
  CHECK(j["vertex_facets"].size() == 5);

  const auto cut = run_cli({"build", "cut-vertex", "(polygon", "4)", "0"});
  REQUIRE(cut.code == cli::kSuccess);
  CHECK(macut::testing::isomorphic(polytope_from_json(Json::parse(cut.out)), polygon(5)));

  const auto square = run_cli({"build", "product", "(simplex", "1)", "(simplex", "1)"});
  REQUIRE(square.code == cli::kSuccess);
  const auto p = polytope_from_json(Json::parse(square.out));
  CHECK(p.facet_count() == 4);
  CHECK(p.vertex_count() == 4);
  CHECK(macut::testing::isomorphic(p, polygon(4)));
}

TEST_CASE("betti") {
  const auto square = run_cli({"betti", "polygon", "4"});
  CHECK(square.code == cli::kSuccess);
  CHECK(square.out.find("1 + 2t^3 + t^6") != std::string::npos);
  CHECK(run_cli({"betti", "simplex", "2"}).out.find("1 + t^5") != std::string::npos);
  CHECK(run_cli({"betti", "polygon", "6"}).out.find("1 + 9t^3 + 16t^4 + 9t^5 + t^8") != std::string::npos);

  const auto j = Json::parse(run_cli({"betti", "polygon", "5", "--json"}).out);
  CHECK(j["poincare"] == "1 + 5t^3 + 5t^4 + t^7");
  CHECK(j["dim"] == 7);
  CHECK(j["groups"]["3"]["rank"] == 5);

  const auto csv = run_cli({"betti", "polygon", "4", "--csv"}).out;
  CHECK(csv == "degree,rank,torsion\n0,1,\n3,2,\n6,1,\n");
}

TEST_CASE("betti on a complex file keeps torsion") {
  const auto path = scratch("rp2.json");
  write_file(path, to_json(macut::testing::rp2()).dump());
  const auto r = run_cli({"betti", "file", path.string(), "--csv"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("9,0,2\n") != std::string::npos);
  CHECK(run_cli({"betti", path.string(), "--csv"}).out == r.out);
}

TEST_CASE("verify") {
  const auto triangle = run_cli({"verify", "polygon", "3", "--all-vertices"});
  CHECK(triangle.code == cli::kSuccess);
  CHECK(triangle.out.find("all match") != std::string::npos);
  CHECK(triangle.out.find("vertex 2: match") != std::string::npos);

  CHECK(run_cli({"verify", "simplex", "3", "0"}).code == cli::kSuccess);
  CHECK(run_cli({"verify", "cube", "3", "0"}).code == cli::kSuccess);

  const auto j = Json::parse(run_cli({"verify", "polygon", "4", "0", "--json"}).out);
  CHECK(j["all_match"] == true);
  CHECK(j["reports"][0]["level"] == "cohomology");
  CHECK(j["reports"][0]["rhs"]["4"]["rank"] == 5);

  CHECK(run_cli({"verify", "polygon", "4", "9"}).code == cli::kUsage);
  CHECK(run_cli({"verify", "polygon", "4"}).code == cli::kUsage);
}

TEST_CASE("verify output is byte-identical across worker counts") {
  for (const auto& format : {"", "--json", "--csv"}) {
    std::vector<std::string> base{"verify", "polygon", "7", "--all-vertices"};
    if (*format) base.emplace_back(format);
    std::string reference;
    for (const auto* workers : {"1", "2", "8"}) {
      auto args = base;
      args.insert(args.end(), {"--workers", workers});
      const auto r = run_cli(args);
      CHECK(r.code == cli::kSuccess);
      if (reference.empty()) reference = r.out;
      CHECK(r.out == reference);
    }
  }
}

TEST_CASE("isotopy-check") {
  const auto two = run_cli({"isotopy-check", "2", "10000", "42"});
  CHECK(two.code == cli::kSuccess);
  CHECK(two.out.find("pass") != std::string::npos);
  CHECK(run_cli({"isotopy-check", "1", "100", "1"}).code == cli::kSuccess);
  CHECK(run_cli({"isotopy-check", "0", "10", "1"}).code == cli::kUsage);
  CHECK(run_cli({"isotopy-check", "2", "1"}).code == cli::kUsage);
  CHECK(run_cli({"isotopy-check"}).code == cli::kUsage);

  const auto j = Json::parse(run_cli({"isotopy-check", "1", "200", "--json", "--seed", "3"}).out);
  CHECK(j["seed"] == 3);
  CHECK(j["passed"] == true);
  CHECK(j["probes"].size() == 6);
}

TEST_CASE("errors map to exit codes") {
  const auto bad = scratch("bad_polytope.json");
  write_file(bad, R"({"dim": 2, "facets": 3, "vertex_facets": [[0, 1], [1, 2], [0]]})");
  const auto invariant = run_cli({"build", "file", bad.string()});
  CHECK(invariant.code == cli::kUsage);
  CHECK(invariant.err.find("simplicity") != std::string::npos);

  const auto malformed = scratch("malformed.json");
  write_file(malformed, "{\"dim\": 2,");
  CHECK(run_cli({"build", "file", malformed.string()}).code == cli::kUsage);
  CHECK(run_cli({"build", "file", scratch("missing.json").string()}).code == cli::kUsage);

  const auto limit = run_cli({"betti", "polygon", "9", "--max-subsets", "8"});
  CHECK(limit.code == cli::kResourceLimit);
  CHECK(limit.err.find("2^9") != std::string::npos);

  CHECK(run_cli({"build", "hexagon", "1"}).code == cli::kUsage);
  CHECK(run_cli({"build", "polygon", "2"}).code == cli::kUsage);
  CHECK(run_cli({"verify", "cut-vertex", "(simplex", "1)", "0", "0"}).code == cli::kUsage);
  CHECK(run_cli({"betti", "polygon", "4", "--json", "--csv"}).code == cli::kUsage);
  CHECK(run_cli({"betti", "polygon", "4", "--workers", "0"}).code == cli::kUsage);
  CHECK(run_cli({}).code == cli::kUsage);
}

TEST_CASE("--output writes the result to a file") {
  const auto path = scratch("square.txt");
  fs::remove(path);
  const auto r = run_cli({"betti", "polygon", "4", "--csv", "--output", path.string()});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.empty());
  std::ifstream file(path);
  std::stringstream text;
  text << file.rdbuf();
  CHECK(text.str() == "degree,rank,torsion\n0,1,\n3,2,\n6,1,\n");
}

TEST_CASE("verify-corpus") {
  const auto r = run_cli({"verify-corpus", "--csv"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("false") == std::string::npos);
  CHECK(r.out.find("polygon 5,5,2,5,true,1 + 9t^3 + 16t^4 + 9t^5 + t^8\n") != std::string::npos);
  CHECK(cli::verification_corpus().size() == 12);
}
