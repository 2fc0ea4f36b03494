#include <doctest.h>

#include <regex>
#include <set>
#include <sstream>

#include "pipn/cli.hpp"
#include "pipn/diagram.hpp"

using namespace pipn;

namespace {
  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> args, std::string input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int                code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
  }
}  // namespace

TEST_CASE("mul") {
  auto r = run({"mul", "-n", "3", "[[1,-1,-2],[2],[3,-3]]", "[[1,2,-1],[-2],[3,-3]]"});
  CHECK(r.code == 0);
  CHECK(r.out == "[[1,-1],[2],[-2],[3,-3]]\n");
  CHECK(run({"mul", "-n", "3", "[[1,2]]"}).code == 1);
  CHECK(run({"mul", "-n", "3"}, "[[1,-2],[2,-1],[3,-3]]\n[[1,-2],[2,-1],[3,-3]]\n").out
        == "[[1,-1],[2,-2],[3,-3]]\n");
}

TEST_CASE("eval") {
  CHECK(run({"eval", "-n", "3", ""}).out == "[[1,-1],[2,-2],[3,-3]]\n");
  CHECK(run({"eval", "-n", "3"}, "l1 r1\ns1\n").out
        == "[[1,-1],[2],[-2],[3,-3]]\n[[1,-2],[2,-1],[3,-3]]\n");
  CHECK(run({"eval", "-n", "3", "q7"}).code == 1);
  CHECK(run({"eval", "-n", "2", "s1"}).code == 1);
}

TEST_CASE("normalize and extract") {
  auto r = run({"normalize", "-n", "3", "--check", "l1 s1", "r1 r1"});
  CHECK(r.code == 0);
  CHECK(r.out == "s=1;(1|1|1,2);M=;sigma=1,2,3\tcheck=ok\ns=0;M=1,2;sigma=1,2,3\tcheck=ok\n");
  CHECK(run({"normalize", "-n", "4", "--fuel", "2", "l1 r2 l3"}).code == 3);
  CHECK(run({"extract", "-n", "3", "[[1,2,-1],[3,-2,-3]]"}).out
        == "s=2;(1|1,2|1);(3|3|2,3);M=;sigma=1,2,3\n");
  // Deterministic.
  CHECK(run({"normalize", "-n", "5", "l1 r3 s2 e4 l4 r1"}).out
        == run({"normalize", "-n", "5", "l1 r3 s2 e4 l4 r1"}).out);
}

TEST_CASE("verify") {
  auto r = run({"verify", "-n", "3", "--suite", "all"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 failures") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "-n", "3", "--suite", "nope"}).code == 1);
  CHECK(run({"verify", "-n", "9", "--suite", "relations"}).code == 1);
}

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "-n", "4", "--count"}).out == "2100\n");
  CHECK(run({"enumerate", "-n", "1"}).out == "[[1],[-1]]\n[[1,-1]]\n");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"mul"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("render") {
  auto a = run({"render", "-n", "3", "[[1,2,-1],[-2],[3,-3]]"});
  CHECK(a.code == 0);
  CHECK(a.out.find("a = {1,2,1'}") != std::string::npos);

  for (char const* payload : {"[[1,2,-1],[-2],[3,-3]]", "l1 r2 s1", "r1 l2 e3"}) {
    auto r = run({"render", "-n", "3", "--format", "svg", payload});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("<svg", 0) == 0);
    CHECK(r.out.find("</svg>") != std::string::npos);
    std::regex                            group(R"re(<g class="block" data-labels="([-0-9,]+)">)re");
    std::vector<Block>                    blocks;
    for (std::sregex_iterator it(r.out.begin(), r.out.end(), group), end; it != end; ++it) {
      Block b;
      std::stringstream ss((*it)[1].str());
      for (std::string tok; std::getline(ss, tok, ',');) {
        b.push_back(std::stoi(tok));
      }
      blocks.push_back(b);
    }
    auto d = run({"eval", "-n", "3", payload});
    Diagram const expected = std::string(payload).front() == '['
                                 ? parse_diagram(payload, 3)
                                 : parse_diagram(d.out, 3);
    CHECK(make_diagram(3, blocks) == expected);
    CHECK(blocks.size() == expected.blocks().size());
    // Open and close tags balance.
    auto count = [&](std::string const& s) {
      std::size_t c = 0;
      for (auto p = r.out.find(s); p != std::string::npos; p = r.out.find(s, p + 1)) {
        ++c;
      }
      return c;
    };
    CHECK(count("<g ") == count("</g>"));
  }
}
