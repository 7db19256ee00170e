#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oreslice/certificate.hpp"
#include "oreslice/cli.hpp"

using namespace oreslice;

namespace {
  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string temp_file(std::string const& name, std::string const& content) {
    auto const path = std::filesystem::temp_directory_path() / ("oreslice_" + name);
    std::ofstream(path) << content;
    return path.string();
  }
}  // namespace

TEST_CASE("word problem and canonical keys") {
  auto const r = run({"wp", "--backend", "mb:2", "a b A B"});
  CHECK(r.code == exit_ok);
  CHECK(r.out == "nontrivial\n");
  CHECK(run({"wp", "--backend", "f", "x1 x0 x2^-1 x0^-1"}).out == "trivial\n");
  CHECK(run({"canon", "--backend", "posmon", "x2 x1 x0"}).out == "x0 x2 x4\n");
  CHECK(run({"canon", "--backend", "zm:2", "a b a"}).out == "(2,1)\n");
  auto const j = Json::parse(run({"canon", "--backend", "f", "--format", "json", "x0"}).out);
  CHECK(j.at("element") == "(CCLLL,CLCLL)");
}

TEST_CASE("alternation commands") {
  CHECK(run({"alt-check", "x0 x1 x0^-1 x1^-1"}).out == "alternating\n");
  CHECK(run({"alt-check", "x1 x0"}).out == "not alternating\n");
  CHECK(run({"alt-check", "--cyclic", "x1 x0"}).out == "alternating\n");

  auto const r = run({"alt-trace", "--format", "json", "x0 x1 x0^-1 x1^-1"});
  CHECK(r.code == exit_ok);
  auto const j = Json::parse(r.out);
  CHECK(j.at("witness") == "exponent sum x1 = +1");
  CHECK(j.at("steps").back().at("rule") == "witness");
  CHECK(run({"alt-trace", "x0 x2"}).code == exit_usage);
}

TEST_CASE("searches and exit codes") {
  auto const hit = run({"ore-search", "--backend", "zm:2", "--max-support", "2", "--pool-len", "1"});
  CHECK(hit.code == exit_ok);
  CHECK(hit.out.find("U = {(0,0), (0,1)}") != std::string::npos);
  CHECK(hit.out.find("V = {(0,0), (1,0)}") != std::string::npos);

  auto const miss = run({"ore-search", "--backend", "posmon", "--a", "x0", "--b", "x1",
                         "--max-support", "3", "--pool-len", "3", "--pool-idx", "4"});
  CHECK(miss.code == exit_exhausted);
  CHECK(miss.out.rfind("exhausted\n", 0) == 0);

  auto const s = run({"ore-signed", "--backend", "zm:2", "--max-support", "2", "--signs", "-,-"});
  CHECK(s.code == exit_ok);
  CHECK(s.out.find("u = 1*(0,0) + -1*(0,1)") != std::string::npos);
  CHECK(run({"ore-signed", "--signs", "-"}).code == exit_usage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == exit_usage);
  CHECK(run({"bogus"}).code == exit_usage);
  CHECK(run({"wp", "--backend", "nope", "a"}).code == exit_usage);
  CHECK(run({"wp", "--format", "xml", "a"}).code == exit_usage);
  CHECK(run({"wp", "--backend", "zm:2", "q"}).code == exit_usage);
  CHECK(run({"ore-search", "--jobs", "0"}).code == exit_usage);
  CHECK(run({"--help"}).code == exit_ok);
}

TEST_CASE("certificate pipeline") {
  auto const found = run({"ore-search", "--backend", "zm:2", "--max-support", "2",
                          "--pool-len", "1", "--format", "json"});
  REQUIRE(found.code == exit_ok);
  auto const path = temp_file("solution.json", found.out);
  CHECK(run({"verify", path}).code == exit_ok);

  auto const ex = run({"extract", "--format", "json", path});
  REQUIRE(ex.code == exit_ok);
  auto const rels = Json::parse(ex.out);
  REQUIRE(rels.at("relations").size() == 1);
  auto const word = rels.at("relations")[0].at("word").get<std::string>();
  CHECK(word == "a^-1 b^-1 a b");
  CHECK(run({"verify", temp_file("relations.json", ex.out)}).code == exit_ok);

  auto const back = run({"rel2sol", "--backend", "zm:2", "--format", "json", word});
  REQUIRE(back.code == exit_ok);
  auto const sol = Json::parse(back.out);
  CHECK(sol.at("U") == Json::array({"(0,0)", "(0,1)"}));
  CHECK(sol.at("V") == Json::array({"(0,0)", "(1,0)"}));
  CHECK(run({"verify", temp_file("back.json", back.out)}).code == exit_ok);

  CHECK(run({"rel2sol", "--backend", "zm:2", "a b a^-1 b"}).code == exit_verification);

  auto forged = Json::parse(found.out);
  forged["U"] = Json::array({"(0,0)", "(1,0)"});
  CHECK(run({"verify", temp_file("forged.json", forged.dump())}).code == exit_verification);
  CHECK(run({"verify", "/nonexistent/cert.json"}).code == exit_usage);
}

TEST_CASE("folner command") {
  auto const ev = run({"folner", "--backend", "posmon", "--pool-idx", "0",
                       "--format", "json", "", "x0", "x1"});
  REQUIRE(ev.code == exit_ok);
  auto const j = Json::parse(ev.out);
  CHECK(j.at("report").at("per_generator")[0].at("intersection_ratio").at("exact") == "1/3");
  CHECK(run({"verify", temp_file("folner.json", ev.out)}).code == exit_ok);

  auto const greedy = run({"folner", "--backend", "zm:2", "--epsilon", "0.5", "--format", "json"});
  CHECK(greedy.code == exit_ok);
  CHECK(Json::parse(greedy.out).at("status") == "success");
  CHECK(run({"verify", temp_file("greedy.json", greedy.out)}).code == exit_ok);
  CHECK(run({"folner", "--backend", "zm:2"}).code == exit_usage);
}

TEST_CASE("pool listing") {
  auto const r = run({"pool", "--backend", "posmon", "--pool-len", "2"});
  CHECK(r.out == "1\nx0\nx0 x0\nx0 x1\nx0 x2\nx1\nx1 x1\n");
}

TEST_CASE("jobs do not change output") {
  for (auto const& base : std::vector<std::vector<std::string>>{
           {"ore-search", "--backend", "posmon", "--a", "x0", "--b", "x1", "--max-support", "3",
            "--pool-len", "3", "--pool-idx", "4", "--format", "json"},
           {"ore-search", "--backend", "zm:2", "--max-support", "2", "--format", "json"},
           {"ore-signed", "--backend", "posmon", "--a", "x0", "--b", "x1", "--max-support", "2",
            "--pool-len", "2", "--pool-idx", "2", "--coeff-bound", "2", "--format", "json"}}) {
    auto one  = base;
    auto four = base;
    one.insert(one.end(), {"--jobs", "1"});
    four.insert(four.end(), {"--jobs", "4"});
    auto const r1 = run(one);
    auto const r4 = run(four);
    CHECK(r1.code == r4.code);
    CHECK(r1.out == r4.out);
  }
}
