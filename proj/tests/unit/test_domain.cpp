#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "generators.hpp"
#include "scott/domain/maps.hpp"
#include "scott/domain/order.hpp"
#include "scott/domain/poset.hpp"
#include "scott/domain/text_format.hpp"

using namespace scott::domain;
using scott::testing::Rng;

TEST_CASE("fixtures are partial orders") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(validate(chain(n)).empty());
    CHECK(validate(antichain(n)).empty());
    CHECK(validate(lift_flat(n)).empty());
  }
  CHECK(validate(diamond()).empty());
  CHECK(validate(powerset(3)).empty());
  CHECK(chain(4).leq(1, 3));
  CHECK_FALSE(chain(4).leq(3, 1));
  CHECK(powerset(3).leq(0b001, 0b011));
  CHECK_FALSE(powerset(3).leq(0b001, 0b110));
}

TEST_CASE("validate reports each broken law with witnesses") {
  // a ⊑ b ⊑ c without a ⊑ c, and b ⊑ a making a, b a cycle.
  std::vector<std::vector<bool>> leq = {
      {true, true, false},
      {true, true, true},
      {false, false, true},
  };
  auto p = FinPoset::from_table({"a", "b", "c"}, leq);
  auto v = validate(p);
  bool anti = false, trans = false;
  for (const auto& x : v) {
    if (x.law == Law::Antisymmetry) anti = true;
    if (x.law == Law::Transitivity) {
      trans = true;
      CHECK(p.leq(x.a, x.b));
      CHECK(p.leq(x.b, x.c));
      CHECK_FALSE(p.leq(x.a, x.c));
    }
  }
  CHECK(anti);
  CHECK(trans);

  std::vector<std::vector<bool>> irreflexive = {{false}};
  auto q = FinPoset::from_table({"x"}, irreflexive);
  REQUIRE(validate(q).size() == 1);
  CHECK(validate(q)[0].law == Law::Reflexivity);
  CHECK(describe(q, validate(q)[0]).find("x") != std::string::npos);
}

TEST_CASE("from_generators rejects cycles and duplicate names") {
  std::vector<std::pair<Elem, Elem>> cyc = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(FinPoset::from_generators({"a", "b"}, cyc), PosetError);
  std::vector<std::pair<Elem, Elem>> none;
  CHECK_THROWS_AS(FinPoset::from_generators({"a", "a"}, none), PosetError);
}

TEST_CASE("sups, joins and directedness on the diamond") {
  auto d = diamond();
  Elem bot = *d.find("bot"), l = *d.find("l"), r = *d.find("r"), top = *d.find("top");
  CHECK(least(d) == bot);
  CHECK(greatest(d) == top);
  CHECK(join(d, l, r) == top);
  CHECK(join(d, bot, l) == l);
  CHECK(is_lattice(d));
  CHECK_FALSE(is_directed(d, subset_of(d, {l, r})));
  CHECK(is_directed(d, subset_of(d, {l, r, top})));
  CHECK_FALSE(is_directed(d, empty_subset(d)));
  CHECK(sup(d, subset_of(d, {l, r})) == top);
  CHECK(sup(d, empty_subset(d)) == bot);
  CHECK_FALSE(is_lattice(antichain(2)));
  CHECK_FALSE(least(antichain(2)).has_value());
}

TEST_CASE("way-below coincides with the order on finite posets") {
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    auto p = scott::testing::random_poset(rng, 1 + rng.below(7));
    auto wb = way_below_relation(p);
    for (Elem x = 0; x < p.size(); ++x) {
      CHECK(is_compact(p, x));
      for (Elem y = 0; y < p.size(); ++y) {
        CHECK(wb[x][y] == p.leq(x, y));
        CHECK(way_below(p, x, y) == p.leq(x, y));
      }
    }
  }
  CHECK_THROWS_AS(way_below(chain(13), 0, 1), LimitExceeded);
}

TEST_CASE("linear extension respects the order") {
  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    auto p = scott::testing::random_poset(rng, 1 + rng.below(9));
    auto ext = linear_extension(p);
    REQUIRE(ext.size() == p.size());
    std::vector<std::size_t> pos(p.size());
    for (std::size_t k = 0; k < ext.size(); ++k) pos[ext[k]] = k;
    for (Elem a = 0; a < p.size(); ++a)
      for (Elem b = 0; b < p.size(); ++b)
        if (p.lt(a, b)) CHECK(pos[a] < pos[b]);
  }
}

TEST_CASE("monotone enumeration matches the brute-force filter") {
  Rng rng(13);
  for (int i = 0; i < 60; ++i) {
    auto p = scott::testing::random_poset(rng, 1 + rng.below(5));
    auto q = scott::testing::random_poset(rng, 1 + rng.below(4));
    auto got = enumerate_monotone_tables(p, q);
    auto want = scott::testing::monotone_tables_oracle(p, q);
    std::set<std::vector<Elem>> got_set(got.begin(), got.end());
    CHECK(got_set.size() == got.size());
    CHECK(got_set == std::set<std::vector<Elem>>(want.begin(), want.end()));
  }
  CHECK(enumerate_monotone_tables(chain(3), chain(3)).size() == 10);
  CHECK(enumerate_monotone_tables(chain(2), chain(2)).size() == 3);
  CHECK_THROWS_AS(enumerate_monotone_tables(antichain(8), chain(8), 1000), LimitExceeded);
}

TEST_CASE("MonoMap rejects non-monotone tables") {
  auto c = share(chain(2));
  CHECK_THROWS_AS(MonoMap(c, c, {1, 0}), PosetError);
  CHECK_THROWS_AS(MonoMap(c, c, {0}), PosetError);
  CHECK_THROWS_AS(MonoMap(c, c, {0, 2}), PosetError);
  MonoMap f(c, c, {0, 1});
  CHECK(f == identity(c));
  CHECK(compose(constant(c, c, 1), f)(0) == 1);
}

TEST_CASE("exponential is ordered pointwise and eval/curry are inverse") {
  Rng rng(14);
  for (int i = 0; i < 20; ++i) {
    auto p = share(scott::testing::random_poset(rng, 1 + rng.below(3)));
    auto q = share(scott::testing::random_pointed_poset(rng, 1 + rng.below(3)));
    auto e = exponential(p, q);
    const auto& ep = *e.poset;
    CHECK(validate(ep).empty());
    for (Elem f = 0; f < ep.size(); ++f)
      for (Elem g = 0; g < ep.size(); ++g) {
        bool pw = true;
        for (Elem x = 0; x < p->size(); ++x) pw = pw && q->leq(e.eval(f, x), e.eval(g, x));
        CHECK(ep.leq(f, g) == pw);
      }

    auto px = product(e.poset, p);
    auto ev = e.eval_map(px);
    for (Elem f = 0; f < ep.size(); ++f)
      for (Elem x = 0; x < p->size(); ++x) CHECK(ev(px.pair(f, x)) == e.eval(f, x));

    // curry(eval) is the identity on the exponential.
    auto cur = e.curry(px, ev);
    CHECK(cur == identity(e.poset));
  }
}

TEST_CASE("product projections and pairing") {
  auto a = share(chain(2));
  auto b = share(diamond());
  auto pr = product(a, b);
  CHECK(pr.poset->size() == 8);
  CHECK(validate(*pr.poset).empty());
  for (Elem x = 0; x < 2; ++x)
    for (Elem y = 0; y < 4; ++y) {
      CHECK(pr.fst(pr.pair(x, y)) == x);
      CHECK(pr.snd(pr.pair(x, y)) == y);
    }
  auto f = constant(a, a, 1);
  auto g = identity(a);
  auto pq = product(a, a);
  auto h = pq.pairing(f, g);
  CHECK(h(0) == pq.pair(1, 0));
  auto fg = product_map(pq, pq, g, f);
  CHECK(fg(pq.pair(0, 0)) == pq.pair(0, 1));
}

// Exhaustive scan for the least fixed point: the oracle for lfp.
static std::optional<Elem> least_fixed_point_scan(const MonoMap& f) {
  const auto& p = *f.source();
  std::vector<Elem> fixed;
  for (Elem x = 0; x < p.size(); ++x)
    if (f(x) == x) fixed.push_back(x);
  for (Elem x : fixed)
    if (std::all_of(fixed.begin(), fixed.end(), [&](Elem y) { return p.leq(x, y); })) return x;
  return std::nullopt;
}

TEST_CASE("lfp agrees with the exhaustive fixed-point scan") {
  Rng rng(15);
  for (int i = 0; i < 60; ++i) {
    auto p = share(scott::testing::random_pointed_poset(rng, 1 + rng.below(5)));
    auto maps = enumerate_monotone_maps(p, p);
    for (const auto& f : maps) {
      auto fix = lfp(f);
      CHECK(f(fix.value) == fix.value);
      CHECK(least_fixed_point_scan(f) == fix.value);
      CHECK(fix.iterations <= p->size());
    }
  }
  auto c = share(chain(4));
  auto top = lfp(MonoMap(c, c, {1, 2, 3, 3}));
  CHECK(top.value == 3);
  CHECK(top.iterations == 3);
  CHECK(lfp(identity(c)).iterations == 0);
  auto ac = share(antichain(2));
  CHECK_THROWS_AS(lfp(identity(ac)), PosetError);
}

TEST_CASE("monotone maps on finite posets preserve directed sups") {
  Rng rng(16);
  for (int i = 0; i < 20; ++i) {
    auto p = share(scott::testing::random_poset(rng, 1 + rng.below(5)));
    for (const auto& f : enumerate_monotone_maps(p, p)) CHECK(preserves_directed_sups(f));
  }
}

TEST_CASE("poset text format round trip") {
  const char* text =
      "# a diamond\n"
      "elem bot\n"
      "elem l\n"
      "elem r\n"
      "elem top\n"
      "le bot l\n"
      "le bot r\n"
      "le l top\n"
      "le r top   # closing\n";
  auto p = parse_poset(text);
  CHECK(p.size() == 4);
  CHECK(p.leq(*p.find("bot"), *p.find("top")));
  std::ostringstream out;
  write_poset(out, p);
  auto q = parse_poset(out.str());
  REQUIRE(q.size() == p.size());
  for (Elem a = 0; a < p.size(); ++a)
    for (Elem b = 0; b < p.size(); ++b) CHECK(p.leq(a, b) == q.leq(a, b));

  Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    auto r = scott::testing::random_poset(rng, 1 + rng.below(8));
    std::ostringstream o;
    write_poset(o, r);
    auto s = parse_poset(o.str());
    for (Elem a = 0; a < r.size(); ++a)
      for (Elem b = 0; b < r.size(); ++b) CHECK(r.leq(a, b) == s.leq(a, b));
  }
}

TEST_CASE("malformed poset and map files report the line") {
  try {
    parse_poset("elem a\nle a b\n");
    FAIL("expected a FormatError");
  } catch (const FormatError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_poset("elem a\nbogus line\n"), FormatError);
  CHECK_THROWS_AS(parse_poset("elem a\nelem b\nle a b\nle b a\n"), std::exception);

  auto c = share(chain(2));
  CHECK(parse_map("map c0 c1\nmap c1 c1\n", c, c)(0) == 1);
  CHECK_THROWS_AS(parse_map("map c0 c1\n", c, c), FormatError);
  CHECK_THROWS_AS(parse_map("map c0 c9\nmap c1 c1\n", c, c), FormatError);
  CHECK_THROWS(parse_map("map c0 c1\nmap c1 c0\n", c, c));
}
