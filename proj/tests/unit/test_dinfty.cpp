#include <doctest.h>

#include <cstdlib>

#include "generators.hpp"
#include "scott/dinfty.hpp"
#include "scott/domain/order.hpp"

using namespace scott::dinfty;

namespace {

// Monotone endomaps counted by brute force over every table.
std::size_t count_monotone_endomaps(const scott::domain::FinPoset& p) {
  return scott::testing::monotone_tables_oracle(p, p).size();
}

}  // namespace

TEST_CASE("tower sizes") {
  auto t = build_tower(2);
  CHECK(t.rank() == 2);
  CHECK(t.level(0)->size() == 2);
  CHECK(t.level(1)->size() == 3);
  CHECK(t.level(2)->size() == 10);
  CHECK(count_monotone_endomaps(*t.level(0)) == 3);
  CHECK(count_monotone_endomaps(*t.level(1)) == 10);
  for (std::size_t n = 0; n <= 2; ++n) {
    CHECK(scott::domain::validate(*t.level(n)).empty());
    CHECK(scott::domain::least(*t.level(n)) == t.bottom(n));
  }
}

TEST_CASE("the generating maps") {
  auto t = build_tower(2);
  const auto& e1 = t.exponential(1);
  // ε_0 sends x to the constant map at x; π_0 evaluates at ⊥.
  for (Elem x = 0; x < 2; ++x) {
    Elem f = t.eps(0)(x);
    CHECK(e1.eval(f, 0) == x);
    CHECK(e1.eval(f, 1) == x);
  }
  for (Elem f = 0; f < 3; ++f) CHECK(t.pi(0)(f) == e1.eval(f, t.bottom(0)));
  CHECK_THROWS_AS(t.exponential(0), RankError);
}

TEST_CASE("embedding-projection laws hold at ranks 0 to 2") {
  for (std::size_t r = 0; r <= 2; ++r) {
    auto report = verify_laws(build_tower(r));
    CHECK(report.all_passed());
    for (const auto& c : report.checks) {
      CHECK(c.passed);
      CHECK(c.checked > 0);
    }
  }
}

TEST_CASE("a broken projection is detected") {
  auto t = build_tower(2);
  // π_1 replaced by the constant ⊥ map.
  auto bad = scott::domain::constant(t.level(2), t.level(1), t.bottom(1));
  t.set_projection(1, bad);
  auto report = verify_laws(t);
  CHECK_FALSE(report.all_passed());
  bool caught = false;
  for (const auto& c : report.checks)
    if (c.name == "pi_eps_identity[1]") {
      caught = !c.passed;
      CHECK_FALSE(c.witness.empty());
    }
  CHECK(caught);
  CHECK_THROWS_AS(t.set_projection(1, scott::domain::identity(t.level(1))), RankError);
}

TEST_CASE("composite maps") {
  auto t = build_tower(2);
  CHECK(eps_nm(t, 1, 1) == scott::domain::identity(t.level(1)));
  auto e02 = eps_nm(t, 0, 2);
  auto p02 = pi_nm(t, 0, 2);
  for (Elem x = 0; x < 2; ++x) {
    CHECK(e02(x) == t.eps(1)(t.eps(0)(x)));
    CHECK(p02(e02(x)) == x);
  }
  CHECK_THROWS_AS(eps_nm(t, 2, 1), RankError);
  CHECK_THROWS_AS(pi_nm(t, 0, 3), RankError);
}

TEST_CASE("rank cap") {
  CHECK_THROWS_AS(build_tower(3, 2), RankError);
  CHECK_NOTHROW(build_tower(1, 1));
  setenv("SCOTT_RANK_CAP", "1", 1);
  CHECK(rank_cap_from_env() == 1);
  CHECK_THROWS_AS(build_tower(2), RankError);
  setenv("SCOTT_RANK_CAP", "two", 1);
  CHECK_THROWS_AS(rank_cap_from_env(), RankError);
  unsetenv("SCOTT_RANK_CAP");
  CHECK(rank_cap_from_env() == kDefaultRankCap);
}

TEST_CASE("elements across ranks") {
  auto t = build_tower(2);
  DInftyElem top0{0, 1};
  auto up = embed_to(t, top0, 2);
  CHECK(up.rank == 2);
  CHECK(equal(t, top0, up));
  CHECK(normalize(t, up).rank == 0);
  CHECK(normalize(t, up).elem == 1);
  CHECK(is_normalized(t, top0));
  CHECK(leq(t, DInftyElem{0, 0}, up));
  CHECK_FALSE(leq(t, up, DInftyElem{1, t.bottom(1)}));
  CHECK_THROWS_AS(embed_to(t, up, 1), RankError);

  // Every element of D_2 normalizes to a rank where it is not in the image
  // of the embedding, and normalizing preserves the element.
  for (Elem x = 0; x < t.level(2)->size(); ++x) {
    DInftyElem e{2, x};
    auto n = normalize(t, e);
    CHECK(is_normalized(t, n));
    CHECK(equal(t, n, e));
  }
  CHECK(render(t, top0) == "D0:top");
}

TEST_CASE("application") {
  auto t = build_tower(2);
  // The constant ⊤ function applied to anything at rank 1 is ⊤.
  DInftyElem konst{1, t.eps(0)(1)};
  for (Elem x = 0; x < 2; ++x) {
    auto r = apply(t, konst, DInftyElem{0, x}, 1);
    CHECK(r.rank == 0);
    CHECK(r.elem == 1);
  }
  // Application is monotone in both arguments at rank 2.
  const auto& d2 = *t.level(2);
  const auto& d1 = *t.level(1);
  for (Elem f = 0; f < d2.size(); ++f)
    for (Elem g = 0; g < d2.size(); ++g)
      for (Elem x = 0; x < d1.size(); ++x)
        for (Elem y = 0; y < d1.size(); ++y)
          if (d2.leq(f, g) && d1.leq(x, y))
            CHECK(d1.leq(apply(t, {2, f}, {1, x}, 2).elem, apply(t, {2, g}, {1, y}, 2).elem));
  // Raising the working rank does not change the answer once it is defined.
  for (Elem f = 0; f < d1.size(); ++f)
    for (Elem x = 0; x < 2; ++x) {
      auto low = apply(t, {1, f}, {0, x}, 1);
      auto high = apply(t, {1, f}, {0, x}, 2);
      CHECK(equal(t, low, high));
    }
  CHECK_THROWS_AS(apply(t, konst, DInftyElem{1, 0}, 1), RankError);
  CHECK_THROWS_AS(apply(t, konst, DInftyElem{0, 0}, 3), RankError);
}
