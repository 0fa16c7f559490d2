#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = braidorbit::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("act") {
    CHECK(run({"act", "--n", "3", "--word", "1", "--k", "1,2,3"}).out == "1,3,4\n");
    CHECK(run({"act", "--n", "3", "--word", "", "--k", "1,2,3"}).out == "1,2,3\n");
    CHECK(run({"act", "--n", "3", "--word", "1", "--k", "1,2,3", "--mod", "3"}).out == "1,0,1 mod 3\n");
    CHECK(run({"act", "--n", "3", "--word", "2", "--k", "1,2,3", "--frame", "PQ"}).out == "-2,1,2\n");
    auto bad = run({"act", "--n", "3", "--word", "5", "--k", "1,2,3"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("generator index 5 exceeds n=3") != std::string::npos);
    CHECK(run({"act", "--n", "3", "--word", "1", "--k", "1,2"}).code == 2);
  }

  TEST_CASE("gram commands") {
    auto g = run({"gram-act", "--word", "1", "--gram", "3 1/3 2/3 1/3", "--values"});
    CHECK(g.code == 0);
    CHECK(g.out == "2 -1 2\n-1 2 -1\n2 -1 2\n");
    auto e = run({"extract-angles", "--gram", "3 1/3 2/3 1/3"});
    CHECK(e.out == "angles: 0,1/3,2/3\nsigns: +1,+1,+1\n");
    auto f = run({"extract-angles", "--float", "--max-den", "8", "--gram", "3 1.41421356237 0 1.41421356237"});
    CHECK(f.out.find("angles: 0,1/4,1/2") == 0);
    CHECK(run({"extract-angles", "--gram", "3 0 0 0"}).out.find("degenerate: rank one") != std::string::npos);
    CHECK(run({"extract-angles", "--gram", "3 1/2 1/2 1/2"}).code == 2);
    CHECK(run({"finite-test", "--angles", "0,1/3,2/3"}).out == "finite m=3\nk: 1,2\n");
    CHECK(run({"finite-test", "--angles", "0,0,0"}).out == "rank-one\n");
  }

  TEST_CASE("reduce") {
    auto r = run({"reduce", "--n", "2", "--k", "0,1", "--verify"});
    CHECK(r.code == 0);
    CHECK(r.out.find("canonical: 1,1\n") == 0);
    CHECK(r.out.find("witness: ") != std::string::npos);
    CHECK(r.out.find("verified") != std::string::npos);

    auto z = run({"reduce", "--n", "4", "--k", "0,0,0,0"});
    CHECK(z.out == "canonical: 0,0,0,0\nsignature: gamma=0, alpha=-, delta=-, x=-\nwitness: \n");
    CHECK(run({"reduce", "--n", "4", "--k", "1,0,0,0", "--verify"}).code == 0);
    auto v = run({"reduce", "--n", "3", "--k", "1,2,3", "--verbose"});
    CHECK(v.out.find("step 4: ") != std::string::npos);
    CHECK(run({"reduce", "--n", "2", "--k", "2,1", "--mod", "3"}).out.find("canonical: 1,1 mod 3") == 0);
  }

  TEST_CASE("same-orbit and signature") {
    CHECK(run({"same-orbit", "--n", "2", "--a", "0,1", "--b", "1,1"}).out == "true\n");
    CHECK(run({"same-orbit", "--n", "4", "--a", "1,1,1,1", "--b", "0,0,1,1"}).out == "false\n");
    CHECK(run({"same-orbit", "--n", "3", "--a", "1,2,3", "--b", "-1,-2,-3"}).out == "false\n");
    CHECK(run({"signature", "--n", "3", "--k", "1,2,3"}).out == "gamma=1, alpha=2, delta=0, x=2\n");
    CHECK(run({"signature", "--n", "4", "--k", "2,4,6,8"}).out == "gamma=2, alpha=2, delta=1, x=-\n");
  }

  TEST_CASE("orbits") {
    auto t = run({"orbits", "--n", "4", "--mod", "2"});
    CHECK(t.code == 0);
    CHECK(t.out.find("signature↔orbit bijection: OK") != std::string::npos);
    CHECK(t.out.find("\t5\t") != std::string::npos);
    CHECK(t.out.find("\t10\t") != std::string::npos);

    auto j = run({"orbits", "--n", "2", "--mod", "3", "--format", "json"});
    std::istringstream in(j.out);
    std::string line;
    std::vector<std::size_t> sizes;
    while (std::getline(in, line)) sizes.push_back(nlohmann::json::parse(line)["size"].get<std::size_t>());
    CHECK(sizes == std::vector<std::size_t>{1, 8});
    CHECK(run({"orbits", "--n", "2", "--mod", "3", "--format", "xml"}).code == 2);
  }

  TEST_CASE("group commands") {
    auto v = run({"verify", "--n", "3"});
    CHECK(v.code == 0);
    CHECK(v.out == "all relations hold; full twist = I\n");
    CHECK(run({"verify", "--n", "4"}).out == "all relations hold; full twist = -I\n");
    CHECK(run({"index", "--s", "2", "--parity", "even"}).out == "6\n");
    CHECK(run({"mod2", "--n", "3"}).out == "order=24 expected=24 generators match: yes same set: yes\n");
    CHECK(run({"congruence", "--n", "2"}).out.find("|G mod 4|=48") != std::string::npos);
  }

  TEST_CASE("file input") {
    auto dir = std::filesystem::temp_directory_path();
    auto path = (dir / "braidorbit_cli_k.txt").string();
    std::ofstream(path) << "1,0,0,0\n";
    CHECK(run({"reduce", "--n", "4", "--file", path}).out.find("canonical: 1,1,1,1\n") == 0);
    std::filesystem::remove(path);
    CHECK(run({"reduce", "--n", "4", "--file", path}).code == 2);
  }

  TEST_CASE("exit codes and determinism") {
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
    ::setenv("BRAIDORBIT_GUARD", "10", 1);
    CHECK(run({"orbits", "--n", "4", "--mod", "3"}).code == 3);
    ::unsetenv("BRAIDORBIT_GUARD");
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"orbits", "--n", "3", "--mod", "4"}, {"reduce", "--n", "5", "--k", "3,-8,1,14,6", "--verbose"}})
      CHECK(run(args).out == run(args).out);
  }
}
