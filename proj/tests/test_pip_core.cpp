#include <doctest.h>

#include <sstream>

#include "pipn/diagram.hpp"
#include "pipn/errors.hpp"
#include "pipn/perm.hpp"
#include "pipn/verify.hpp"
#include "support.hpp"

using namespace pipn;

namespace {
  Diagram D(int n, std::vector<Block> b) {
    return make_diagram(n, std::move(b));
  }
}  // namespace

TEST_CASE("make_diagram") {
  CHECK(D(2, {{1, -1}, {2, -2}}) == Diagram::identity(2));
  CHECK(D(2, {{1, 2, -1}, {-2}}) == generator_r(2, 1, 2));
  CHECK_THROWS_AS(D(2, {{1, 2}, {-1, -2}}), InvalidInput);
  CHECK_THROWS_AS(D(0, {}), InvalidInput);
  CHECK_THROWS_AS(D(2, {{1, -1}, {2}}), InvalidInput);             // -2 missing
  CHECK_THROWS_AS(D(2, {{1, -1}, {2, -2}, {2}}), InvalidInput);    // repeated
  CHECK_THROWS_AS(D(2, {{1, -1}, {3, -2}, {2}}), InvalidInput);    // out of range
  CHECK_THROWS_AS(D(2, {{1, -1}, {}, {2, -2}}), InvalidInput);     // empty block
}

TEST_CASE("canonical storage order") {
  Diagram a = D(3, {{-3, 3}, {-2}, {-1, 2, 1}});
  CHECK(serialize(a) == "[[1,2,-1],[-2],[3,-3]]");
  Diagram b = D(3, {{-1, 1}, {3, -3}, {-2}, {2}});
  CHECK(serialize(b) == "[[1,-1],[2],[-2],[3,-3]]");
}

TEST_CASE("multiply") {
  CHECK(generator_l(3, 1, 2) * generator_r(3, 1, 2) == D(3, {{1, -1}, {2}, {-2}, {3, -3}}));
  CHECK(generator_l(3, 1, 2) * generator_l(3, 3, 2) == generator_eps(3, 1) * generator_l(3, 3, 2));
  CHECK(generator_r(3, 1, 2) * generator_l(3, 3, 2) == D(3, {{1, 2, -1}, {3, -2, -3}}));
  for (auto const& a : enumerate_pip(3)) {
    CHECK(Diagram::identity(3) * a == a);
  }
  CHECK_THROWS_AS(Diagram::identity(2) * Diagram::identity(3), InvalidInput);
}

TEST_CASE("multiply agrees with the graph search oracle") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 6; ++n) {
    for (int i = 0; i < 2000; ++i) {
      Diagram a = test::random_diagram(n, rng), b = test::random_diagram(n, rng);
      REQUIRE(a * b == test::oracle_product(a, b));
    }
  }
  auto all = enumerate_pip(2);
  for (auto const& a : all) {
    for (auto const& b : all) {
      CHECK(a * b == test::oracle_product(a, b));
    }
  }
}

TEST_CASE("star") {
  CHECK(star(Diagram::identity(4)) == Diagram::identity(4));
  CHECK(star(generator_l(3, 1, 2)) == generator_r(3, 1, 2));
  CHECK(star(generator_eps(3, 1)) == generator_eps(3, 1));
}

TEST_CASE("generators") {
  CHECK(generator_s(3, 1, 2) == D(3, {{1, -2}, {2, -1}, {3, -3}}));
  CHECK(generator_eps(3, 1) == D(3, {{1}, {-1}, {2, -2}, {3, -3}}));
  CHECK(generator_l(3, 1, 2) == D(3, {{1, -1, -2}, {2}, {3, -3}}));
  CHECK(generator_r(4, 3, 1) == D(4, {{1, 3, -3}, {-1}, {2, -2}, {4, -4}}));
  CHECK_THROWS_AS(generator_s(3, 1, 1), InvalidInput);
  CHECK_THROWS_AS(generator_l(3, 0, 1), InvalidInput);
  CHECK_THROWS_AS(generator_eps(3, 4), InvalidInput);
}

TEST_CASE("perm_diagram") {
  CHECK(perm_diagram(Perm::identity(3)) == Diagram::identity(3));
  CHECK(perm_diagram(Perm::transposition(2, 1, 2)) == D(2, {{1, -2}, {2, -1}}));
  Perm const p = Perm::transposition(3, 1, 2), q = Perm::transposition(3, 2, 3);
  CHECK(perm_diagram(p) * perm_diagram(q) == perm_diagram(Perm({3, 1, 2})));
  CHECK((p * q) == Perm({3, 1, 2}));
  for (auto const& a : all_perms(4)) {
    for (auto const& b : all_perms(4)) {
      CHECK(perm_diagram(a) * perm_diagram(b) == perm_diagram(a * b));
    }
  }
}

TEST_CASE("perm") {
  Perm p({2, 3, 1});
  CHECK(p(1) == 2);
  CHECK((p * p.inverse()).is_identity());
  CHECK(to_string(p) == "2,3,1");
  CHECK(parse_perm(" 2, 3,1 ", 3) == p);
  CHECK_THROWS_AS(Perm({1, 1, 2}), InvalidInput);
  CHECK_THROWS_AS(parse_perm("1,2", 3), InvalidInput);
  CHECK(all_perms(4).size() == 24);
}

TEST_CASE("serialize and parse") {
  CHECK(serialize(Diagram::identity(2)) == "[[1,-1],[2,-2]]");
  CHECK(serialize(generator_r(2, 1, 2)) == "[[1,2,-1],[-2]]");
  CHECK_THROWS_AS(parse_diagram("[[1,2],[-1,-2]]", 2), InvalidInput);
  CHECK(parse_diagram(" [ [ 2 , -1 ,1] , [-2] ] ", 2) == generator_r(2, 1, 2));
  for (char const* bad : {"", "[", "[[1,-1]", "[[1,-1],[2,-2]]x", "[[1,-1][2,-2]]", "[[a]]", "[[1,,-1],[2,-2]]"}) {
    CHECK_THROWS_AS(parse_diagram(bad, 2), InvalidInput);
  }
  std::ostringstream os;
  os << generator_eps(3, 2);
  CHECK(os.str() == "[[1,-1],[2],[-2],[3,-3]]");
}

TEST_CASE("properties: associativity") {
  std::mt19937_64 rng(1);
  for (int n = 2; n <= 6; ++n) {
    for (int i = 0; i < 10000; ++i) {
      Diagram a = test::random_diagram(n, rng), b = test::random_diagram(n, rng),
              c = test::random_diagram(n, rng);
      REQUIRE((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("properties: identity, star, inverse law, closure of IP_n, storage") {
  for (int n = 1; n <= 4; ++n) {
    for (auto const& a : enumerate_pip(n)) {
      REQUIRE(a * Diagram::identity(n) == a);
      REQUIRE(Diagram::identity(n) * a == a);
      REQUIRE(star(star(a)) == a);
      REQUIRE(parse_diagram(serialize(a), n) == a);
    }
  }
  for (int n = 1; n <= 3; ++n) {
    auto all = enumerate_pip(n);
    for (auto const& a : all) {
      REQUIRE(a * star(a) * a == a);
      REQUIRE(star(a) * a * star(a) == star(a));
      for (auto const& b : all) {
        REQUIRE(star(a * b) == star(b) * star(a));
        if (a.is_point_free() && b.is_point_free()) {
          REQUIRE((a * b).is_point_free());
        }
      }
    }
  }
  std::mt19937_64 rng(2);
  for (int n = 4; n <= 6; ++n) {
    for (int i = 0; i < 5000; ++i) {
      Diagram a = test::random_diagram(n, rng), b = test::random_diagram(n, rng);
      REQUIRE(a * star(a) * a == a);
      REQUIRE(star(a) * a * star(a) == star(a));
      REQUIRE(star(a * b) == star(b) * star(a));
      REQUIRE(serialize(parse_diagram(serialize(a), n)) == serialize(a));
    }
  }
}

TEST_CASE("properties: IP_4 is closed") {
  std::vector<Diagram> ip;
  for (auto const& a : enumerate_pip(4)) {
    if (a.is_point_free()) {
      ip.push_back(a);
    }
  }
  REQUIRE(ip.size() == 339);
  for (auto const& a : ip) {
    for (auto const& b : ip) {
      REQUIRE((a * b).is_point_free());
    }
  }
}

TEST_CASE("hash is consistent with equality") {
  auto all = enumerate_pip(3);
  for (auto const& a : all) {
    CHECK(DiagramHash{}(a) == DiagramHash{}(parse_diagram(serialize(a), 3)));
  }
}
