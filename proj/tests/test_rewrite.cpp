#include <doctest.h>

#include "pipn/errors.hpp"
#include "pipn/rewrite.hpp"
#include "pipn/verify.hpp"
#include "support.hpp"

using namespace pipn;

namespace {
  Word W(int n, char const* text) {
    return parse_word(text, n);
  }

  FactorForm F(int n, std::vector<PairFactor> fs, IndexSet e = {}, Perm tail = {}) {
    if (tail.degree() == 0) {
      tail = Perm::identity(n);
    }
    return {n, std::move(fs), std::move(e), std::move(tail)};
  }

  constexpr auto R = FactorKind::rho;
  constexpr auto L = FactorKind::lambda;

  Fuel plenty() {
    return Fuel(1u << 20);
  }
}  // namespace

TEST_CASE("to_factor_form") {
  Fuel fuel = plenty();
  FactorForm const empty = to_factor_form(W(3, ""), fuel);
  CHECK(empty.factors.empty());
  CHECK(empty.e_set.empty());
  CHECK(empty.tail.is_identity());

  FactorForm const sl = to_factor_form(W(3, "s1 l1"), fuel);
  CHECK(sl.lambda_factors() == std::vector<std::pair<int, int>>{{2, 1}});
  CHECK(sl.tail == Perm::transposition(3, 1, 2));
  CHECK(sl.value() == eval_word(W(3, "s1 l1")));

  // The e from l_1 r_1 appears once the factors are sorted.
  FactorForm lr = to_factor_form(W(3, "l1 r1"), fuel);
  CHECK(lr.value() == generator_eps(3, 2));
  lr = sort_factors(lr, fuel);
  CHECK(lr.factors.empty());
  CHECK(lr.e_set == IndexSet{2});
  CHECK(lr.tail.is_identity());

  FactorForm const e = to_factor_form(W(3, "s1 e1"), fuel);
  CHECK(e.e_set == IndexSet{2});
}

TEST_CASE("sort_factors") {
  Fuel fuel = plenty();
  auto const swapped = sort_factors(F(4, {{L, 1, 2}, {R, 3, 4}}), fuel);
  CHECK(swapped.factors == std::vector<PairFactor>{{R, 3, 4}, {L, 1, 2}});
  CHECK(swapped.e_set.empty());

  auto const gone = sort_factors(F(3, {{L, 1, 2}, {R, 1, 2}}), fuel);
  CHECK(gone.factors.empty());
  CHECK(gone.e_set == IndexSet{2});

  auto const r8 = sort_factors(F(3, {{L, 1, 2}, {R, 3, 1}}), fuel);
  CHECK(r8.factors == std::vector<PairFactor>{{R, 3, 1}, {L, 3, 1}});
  CHECK(r8.e_set == IndexSet{2});
  CHECK(r8.tail == Perm::transposition(3, 1, 2));

  // Every shape of overlap, each preserving the value.
  for (int n = 3; n <= 4; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int l = 1; l <= n; ++l) {
        for (int x = 1; x <= n; ++x) {
          for (int y = 1; y <= n; ++y) {
            if (k == l || x == y) {
              continue;
            }
            FactorForm const in = F(n, {{L, k, l}, {R, x, y}, {L, y, x}}, {x});
            FactorForm const out = sort_factors(in, fuel);
            REQUIRE(out.value() == in.value());
            REQUIRE(out.lambda_factors().size() + out.rho_factors().size() <= 3);
            bool seen_lambda = false;
            for (auto const& f : out.factors) {
              seen_lambda = seen_lambda || f.kind == L;
              REQUIRE((f.kind == L || !seen_lambda));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("dedupe_factors") {
  Fuel fuel = plenty();
  auto const sq = dedupe_factors(F(3, {{R, 1, 2}, {R, 1, 2}}), fuel);
  CHECK(sq.factors.empty());
  CHECK(sq.e_set == IndexSet{1, 2});

  auto const r4 = dedupe_factors(F(3, {{R, 1, 2}, {R, 2, 3}}), fuel);
  CHECK(r4.factors == std::vector<PairFactor>{{R, 1, 2}});
  CHECK(r4.e_set == IndexSet{3});

  auto const r5 = dedupe_factors(F(3, {{L, 1, 2}, {L, 3, 2}}), fuel);
  CHECK(r5.factors == std::vector<PairFactor>{{L, 3, 2}});
  CHECK(r5.e_set == IndexSet{1});

  auto const r3 = dedupe_factors(F(3, {{R, 1, 2}, {R, 3, 1}}), fuel);
  CHECK(r3.factors == std::vector<PairFactor>{{R, 3, 1}, {R, 3, 2}});
  CHECK(r3.value() == F(3, {{R, 1, 2}, {R, 3, 1}}).value());

  auto const shared = F(4, {{R, 1, 2}, {R, 1, 3}, {L, 4, 1}, {L, 4, 2}});
  CHECK(dedupe_factors(shared, fuel) == shared);
}

TEST_CASE("enforce_disjointness") {
  Fuel fuel = plenty();
  auto const i = enforce_disjointness(F(3, {{R, 1, 2}, {L, 3, 1}}), fuel);
  CHECK(i.factors == std::vector<PairFactor>{{L, 3, 1}});
  CHECK(i.e_set == IndexSet{2});

  auto const iii = enforce_disjointness(F(3, {{L, 1, 2}}, {2}), fuel);
  CHECK(iii.factors.empty());
  CHECK(iii.e_set == IndexSet{1, 2});

  auto const fine = F(4, {{R, 1, 2}, {L, 1, 3}, {L, 4, 2}}, {}, Perm({2, 1, 4, 3}));
  CHECK(enforce_disjointness(fine, fuel) == fine);

  auto const absorb = enforce_disjointness(F(3, {{R, 1, 2}}, {2}), fuel);
  CHECK(absorb.factors == std::vector<PairFactor>{{R, 1, 2}});
  CHECK(absorb.e_set.empty());
}

TEST_CASE("normalize") {
  CanonicalWord const a = normalize(W(3, "l1 s1"));
  CHECK(to_string(a) == "s=1;(1|1|1,2);M=;sigma=1,2,3");
  CanonicalWord const b = normalize(W(3, "r1 r1"));
  CHECK(to_string(b) == "s=0;M=1,2;sigma=1,2,3");
  CHECK(normalize(W(3, "")) == canonical_of_diagram(Diagram::identity(3)));
  CHECK_THROWS_AS(normalize(W(4, "l1 r2 l3 r1 s2 l2 e4 r3"), 3), FuelExhausted);
  CHECK(default_fuel(W(3, "s1 s2")) == 250);
}

TEST_CASE("every stage preserves the value") {
  std::mt19937_64 rng(10);
  for (int n = 3; n <= 6; ++n) {
    for (int it = 0; it < 3000; ++it) {
      Word const    w = test::random_word_of(n, 20, rng);
      Diagram const v = eval_word(w);
      Fuel          fuel(default_fuel(w));
      INFO(to_string(w));
      FactorForm f = to_factor_form(w, fuel);
      REQUIRE(f.value() == v);
      REQUIRE(eval_word(f.to_word()) == v);
      f = sort_factors(std::move(f), fuel);
      REQUIRE(f.value() == v);
      f = dedupe_factors(std::move(f), fuel);
      REQUIRE(f.value() == v);
      f = enforce_disjointness(std::move(f), fuel);
      REQUIRE(f.value() == v);
      CanonicalWord const cw = assemble(f);
      REQUIRE_NOTHROW(cw.validate());
      REQUIRE(eval_canonical(cw) == v);
    }
  }
}

TEST_CASE("normalizing a canonical word returns an equivalent one") {
  std::mt19937_64 rng(12);
  for (int n = 3; n <= 6; ++n) {
    for (int it = 0; it < 1500; ++it) {
      CanonicalWord const cw = test::random_canonical(n, rng);
      INFO(to_string(cw));
      REQUIRE(equivalent(normalize(canonical_to_word(cw)), standardize(cw)));
      CanonicalWord const sym = normalize_symbolic(canonical_to_word(cw));
      REQUIRE(equivalent(sym, cw));
    }
  }
}

TEST_CASE("normalize separates values") {
  std::mt19937_64 rng(13);
  auto const      rel = relation_instances(4);
  for (int n = 3; n <= 4; ++n) {
    auto const insts = n == 4 ? rel : relation_instances(3);
    for (int it = 0; it < 3000; ++it) {
      Word const u = test::random_word_of(n, 10, rng), v = test::random_word_of(n, 10, rng);
      auto const& r = insts[rng() % insts.size()];
      Word const  a = u + r.lhs + v, b = u + r.rhs + v;
      REQUIRE(equivalent(normalize(a), normalize(b)));
      Word const c = test::random_word_of(n, 20, rng);
      REQUIRE(equivalent(normalize(a), normalize(c)) == (eval_word(a) == eval_word(c)));
    }
  }
}
