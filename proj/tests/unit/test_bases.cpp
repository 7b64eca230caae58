#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "scott/bases/abstract_basis.hpp"
#include "scott/bases/ideal.hpp"
#include "scott/bases/step.hpp"
#include "scott/domain/order.hpp"
#include "scott/domain/text_format.hpp"

using namespace scott::bases;
using scott::domain::FinPoset;
using scott::testing::Rng;

TEST_CASE("a reflexive poset basis satisfies the axioms") {
  for (const FinPoset& p : {scott::domain::chain(4), scott::domain::diamond(),
                            scott::domain::antichain(3), scott::domain::lift_flat(2)}) {
    auto b = FiniteBasis::from_poset(p);
    auto r = check_abstract_basis(b);
    CHECK(r.ok());
    CHECK(r.failure.empty());
  }
}

TEST_CASE("axiom failures are reported") {
  // a ≺ b ≺ c without a ≺ c.
  std::vector<std::vector<bool>> nontransitive = {
      {false, true, false}, {false, false, true}, {false, false, false}};
  auto r = check_abstract_basis(FiniteBasis({"a", "b", "c"}, nontransitive, false));
  CHECK_FALSE(r.transitive);
  CHECK(r.failure.rfind("transitivity", 0) == 0);

  // The strict order of a finite chain: its least element has nothing below.
  std::vector<std::vector<bool>> strict = {{false, true}, {false, false}};
  r = check_abstract_basis(FiniteBasis({"a", "b"}, strict, false));
  CHECK(r.transitive);
  CHECK_FALSE(r.nullary);
  CHECK(r.failure == "nullary interpolation a");
}

TEST_CASE("basis file format") {
  auto b = parse_basis("# two points\nreflexive\nelem x\nelem y\nprec x y\n");
  CHECK(b.size() == 2);
  CHECK(b.reflexive());
  CHECK(b.prec(0, 0));
  CHECK(b.prec(0, 1));
  CHECK_FALSE(b.prec(1, 0));
  CHECK_THROWS_AS(parse_basis("elem x\nprec x z\n"), scott::domain::FormatError);
  CHECK_THROWS_AS(parse_basis("element x\n"), scott::domain::FormatError);
}

TEST_CASE("ideal completion of a finite poset is the poset itself") {
  Rng rng(61);
  std::vector<FinPoset> fixtures = {scott::domain::chain(5), scott::domain::diamond(),
                                    scott::domain::antichain(3), scott::domain::lift_flat(3)};
  for (int i = 0; i < 30; ++i) fixtures.push_back(scott::testing::random_poset(rng, 1 + rng.below(5)));
  for (const auto& p : fixtures) {
    auto ref = scott::domain::share(p);
    auto b = FiniteBasis::from_poset(p);
    auto idl = idl_finite(b);
    CHECK(idl.ideals.size() == p.size());
    auto emb = principal_embedding(ref, idl);
    CHECK(is_order_isomorphism(emb));
    for (std::size_t i = 0; i < idl.ideals.size(); ++i) {
      const auto& ideal = idl.ideals[i];
      CHECK(is_rounded(b, ideal));
      // The union of principal ideals of its members.
      Subset u(p.size(), false);
      for (auto a : scott::domain::members(ideal)) {
        auto down = principal_ideal(b, a);
        for (std::size_t k = 0; k < u.size(); ++k) u[k] = u[k] || down[k];
      }
      CHECK(u == ideal);
      CHECK(idl_way_below(b, ideal, ideal));
    }
  }
  CHECK_THROWS_AS(idl_finite(FiniteBasis::from_poset(scott::domain::chain(11))),
                  scott::domain::LimitExceeded);
}

TEST_CASE("ideal predicates") {
  auto b = FiniteBasis::from_poset(scott::domain::diamond());
  CHECK_FALSE(is_ideal(b, Subset(4, false)));
  CHECK(is_ideal(b, principal_ideal(b, 3)));
  // {bot, l, r} is lower but not directed.
  CHECK_FALSE(is_ideal(b, Subset{true, true, true, false}));
  // {l} is directed but not lower.
  CHECK_FALSE(is_ideal(b, Subset{false, true, false, false}));
  CHECK(subset_leq(principal_ideal(b, 1), principal_ideal(b, 3)));
  CHECK_FALSE(subset_leq(principal_ideal(b, 1), principal_ideal(b, 2)));
}

TEST_CASE("compact bases of finite posets") {
  auto d = scott::domain::diamond();
  CHECK(check_compact_basis(d, {0, 1, 2, 3}).ok());
  auto r = check_compact_basis(d, {0, 1, 2});
  CHECK(r.all_compact);
  CHECK_FALSE(r.approximating);
  CHECK(r.witness == 3);
}

TEST_CASE("step functions and their decomposition") {
  for (std::size_t n : {2, 3}) {
    auto c = scott::domain::share(scott::domain::chain(n));
    auto maps = scott::domain::enumerate_monotone_maps(c, c);
    for (const auto& f : maps) {
      auto pairs = decompose_into_step_functions(f);
      CHECK(join_of_step_functions(c, c, pairs) == f);
      for (scott::domain::Elem d = 0; d < n; ++d)
        for (scott::domain::Elem e = 0; e < n; ++e) {
          auto step = step_function(c, c, d, e);
          CHECK(scott::domain::pointwise_leq(step, f) == c->leq(e, f(d)));
        }
    }
  }
  auto c = scott::domain::share(scott::domain::chain(3));
  auto s = step_function(c, c, 1, 2);
  CHECK(s.table() == std::vector<scott::domain::Elem>{0, 2, 2});
  auto ac = scott::domain::share(scott::domain::antichain(2));
  CHECK_THROWS_AS(step_function(c, ac, 0, 0), scott::domain::PosetError);
}

TEST_CASE("directification takes finite joins") {
  auto p = scott::domain::share(scott::domain::powerset(3));
  Directification dir(p, {0b001, 0b010, 0b100, 0b011});
  std::vector<std::size_t> none, one{0}, two{0, 1}, all{0, 1, 2, 3};
  CHECK(dir(none) == 0);
  CHECK(dir(one) == 0b001);
  CHECK(dir(two) == 0b011);
  CHECK(dir(all) == 0b111);
  CHECK_THROWS_AS(Directification(scott::domain::share(scott::domain::antichain(2)), {}),
                  scott::domain::PosetError);
  std::vector<scott::domain::Elem> xs{2, 0, 2};
  CHECK(list_to_subset(4, xs) == Subset{true, false, true, false});
}
