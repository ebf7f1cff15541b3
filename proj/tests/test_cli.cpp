#include <doctest.h>

#include <sstream>

#include "uplus/cli.hpp"
#include "uplus/serialize.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = uplus::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("fuse") {
    CHECK(run({"fuse", "a", "b"}).out == "{\"ab\":1,\"e\":1}\n");
    CHECK(run({"fuse", "e", "ab"}).out == "{\"ab\":1}\n");
    CHECK(run({"fuse", "a", "a"}).out == "{\"aa\":1}\n");
    CHECK(run({"--format", "text", "fuse", "a", "b"}).out == "a (x) b = e + ab\n");
    const auto dimmed = run({"fuse", "ab", "ab", "--dim", "--n", "3"});
    CHECK(dimmed.code == 0);
    const auto j = uplus::Json::parse(dimmed.out);
    CHECK(j["dimension_check"]["holds"] == true);
    CHECK(j["dimension_check"]["dim_product"] == "64");
  }

  TEST_CASE("parse errors exit with 2") {
    CHECK(run({"fuse", "ax", "b"}).code == 2);
    CHECK(run({"fuse", "a"}).code == 2);
    CHECK(run({"check-fingen", "--k", "0"}).code == 2);
    CHECK(run({"orbit", "--seed", "ab", "--gens", "rotate"}).code == 2);
    CHECK(run({"--format", "xml", "fuse", "a", "b"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("check-fingen") {
    const auto r = run({"check-fingen", "--k", "2"});
    CHECK(r.code == 0);
    const auto j = uplus::Json::parse(r.out);
    CHECK(j["generated"] == false);
    CHECK((j["witness_invariant"] == "1" || j["witness_invariant"] == "-1"));
    CHECK(run({"check-fingen", "--k", "6"}).code == 0);
    CHECK(run({"check-fingen", "--k", "13"}).code == 4);
    CHECK(run({"--budget", "16", "check-fingen", "--k", "5"}).code == 4);
  }

  TEST_CASE("scan") {
    const auto r = run({"scan", "--kmax", "3"});
    CHECK(r.code == 0);
    CHECK(uplus::Json::parse(r.out).size() == 3);
    CHECK(run({"scan", "--kmax", "0"}).code == 2);
    const auto text = run({"--format", "text", "scan", "--kmax", "1"});
    CHECK(text.out == "k=1 component_dim=2 span_rank=1 generated=false witness=aa witness_invariant=1\n");
  }

  TEST_CASE("graph") {
    const auto dot = run({"graph", "--k", "3", "--dot"});
    CHECK(dot.code == 0);
    std::size_t vertices = 0, edges = 0;
    std::istringstream lines(dot.out);
    for (std::string line; std::getline(lines, line);) {
      if (line.find("fillcolor") != std::string::npos) ++vertices;
      if (line.find(" -- ") != std::string::npos) ++edges;
    }
    CHECK(vertices == 8);
    CHECK(edges == 12);
    const auto j = uplus::Json::parse(run({"graph", "--k", "2"}).out);
    CHECK(j["hypercube"] == true);
    CHECK(j["vertices"].size() == 4);
    CHECK(run({"graph", "--k", "1", "--edges"}).out == "aa ab\n");
  }

  TEST_CASE("orbit, compact and surjectivity") {
    const auto o = uplus::Json::parse(run({"orbit", "--seed", "aba", "--gens", "gamma"}).out);
    CHECK(o["size"] == 2);
    const auto both = uplus::Json::parse(run({"orbit", "--seed", "aab", "--gens", "gamma,dual"}).out);
    CHECK(both["size"] == 4);
    const auto c = run({"compact", "--gens", "gamma", "--generator", "a", "--max-len", "6"});
    CHECK(c.code == 0);
    CHECK(uplus::Json::parse(c.out)["max_orbit_size"] == 2);
    CHECK(run({"--cap", "1", "compact", "--gens", "gamma"}).code == 4);
    const auto s = run({"surjectivity", "--degree", "6"});
    CHECK(s.code == 0);
    CHECK(uplus::Json::parse(s.out)["surjective"] == true);
  }

  TEST_CASE("verify passes and is deterministic") {
    const auto a = run({"verify", "--seed", "4", "--samples", "50", "--max-degree", "4"});
    const auto b = run({"verify", "--seed", "4", "--samples", "50", "--max-degree", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    for (const auto& item : uplus::Json::parse(a.out)) CHECK(item["passed"] == true);
  }
}
