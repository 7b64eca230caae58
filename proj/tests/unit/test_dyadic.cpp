#include <doctest.h>

#include "scott/bases/abstract_basis.hpp"
#include "scott/dyadic.hpp"

using namespace scott::dyadic;

namespace {

Dyadic D(const char* s) { return Dyadic::parse(s); }

// Compares the represented rationals: the oracle for ≺.
bool less_by_value(const Dyadic& x, const Dyadic& y) {
  Rational a = to_rational(x), b = to_rational(y);
  const std::uint32_t e = std::max(a.exp, b.exp);
  return a.num * (std::int64_t{1} << (e - a.exp)) < b.num * (std::int64_t{1} << (e - b.exp));
}

}  // namespace

TEST_CASE("constructors and parsing") {
  CHECK(D("m").is_middle());
  CHECK(D("Lm").is_left());
  CHECK(D("RLm").is_right());
  CHECK(D("RLm").inner() == D("Lm"));
  CHECK(D("LRm").depth() == 2);
  CHECK(Dyadic::left(Dyadic::right(Dyadic::middle())).str() == "LRm");
  CHECK_THROWS_AS(D(""), std::invalid_argument);
  CHECK_THROWS_AS(D("L"), std::invalid_argument);
  CHECK_THROWS_AS(D("Xm"), std::invalid_argument);
  CHECK_THROWS_AS(D("mm"), std::invalid_argument);
}

TEST_CASE("the nine cases of the order") {
  const Dyadic m = D("m"), x = D("Lm"), y = D("Rm");
  CHECK_FALSE(prec(m, m));
  CHECK(prec(Dyadic::left(x), m));
  CHECK_FALSE(prec(Dyadic::right(x), m));
  CHECK_FALSE(prec(m, Dyadic::left(x)));
  CHECK(prec(Dyadic::left(x), Dyadic::left(y)) == prec(x, y));
  CHECK(prec(Dyadic::left(y), Dyadic::left(x)) == prec(y, x));
  CHECK_FALSE(prec(Dyadic::right(x), Dyadic::left(y)));
  CHECK(prec(m, Dyadic::right(x)));
  CHECK(prec(Dyadic::left(y), Dyadic::right(x)));
  CHECK(prec(Dyadic::right(x), Dyadic::right(y)) == prec(x, y));
}

TEST_CASE("rational reading") {
  CHECK(render_rational(D("m")) == "0");
  CHECK(render_rational(D("Rm")) == "1/2");
  CHECK(render_rational(D("Lm")) == "-1/2");
  CHECK(render_rational(D("LRm")) == "-1/4");
  CHECK(render_rational(D("RRm")) == "3/4");
}

TEST_CASE("order, trichotomy and interpolation agree with the rational oracle") {
  const auto xs = enumerate_depth(5);
  REQUIRE(xs.size() == 63);
  for (const auto& x : xs)
    for (const auto& y : xs) {
      CHECK(prec(x, y) == less_by_value(x, y));
      const int count = prec(x, y) + prec(y, x) + (x == y);
      CHECK(count == 1);
      switch (compare(x, y)) {
        case Ordering::Less: CHECK(prec(x, y)); break;
        case Ordering::Greater: CHECK(prec(y, x)); break;
        case Ordering::Equal: CHECK(x == y); break;
      }
      if (prec(x, y)) {
        const Dyadic z = interpolant(x, y);
        CHECK(prec(x, z));
        CHECK(prec(z, y));
        CHECK(principal_way_below(x, y));
        CHECK(way_below_witness(x, y) == z);
      } else {
        CHECK_THROWS_AS(interpolant(x, y), std::invalid_argument);
        CHECK_FALSE(way_below_witness(x, y).has_value());
      }
    }
}

TEST_CASE("interpolants follow the density construction") {
  CHECK(interpolant(D("m"), D("Rm")) == D("RLm"));
  CHECK(interpolant(D("Lm"), D("m")) == D("LRm"));
  CHECK(interpolant(D("Lm"), D("Rm")) == D("m"));
  CHECK(interpolant(D("LLm"), D("Lm")) == Dyadic::left(interpolant(D("Lm"), D("m"))));
  CHECK(interpolant(D("Rm"), D("RRm")) == Dyadic::right(interpolant(D("m"), D("Rm"))));
}

TEST_CASE("endpoints and binary interpolation") {
  for (const auto& x : enumerate_depth(4)) {
    auto [l, r] = endpoints(x);
    CHECK(prec(l, x));
    CHECK(prec(x, r));
  }
  const auto xs = enumerate_depth(3);
  for (const auto& a1 : xs)
    for (const auto& a2 : xs)
      for (const auto& b : xs)
        if (prec(a1, b) && prec(a2, b)) {
          const Dyadic c = binary_interpolant(a1, a2, b);
          CHECK(prec(a1, c));
          CHECK(prec(a2, c));
          CHECK(prec(c, b));
        }
}

TEST_CASE("enumeration sizes") {
  for (std::size_t d = 0; d <= 6; ++d) CHECK(enumerate_depth(d).size() == (2u << d) - 1);
  CHECK(enumerate_depth(0)[0] == D("m"));
}

TEST_CASE("the dyadics form an abstract basis") {
  scott::bases::SampledBasis<Dyadic> b{
      enumerate_depth(4),
      [](const Dyadic& x, const Dyadic& y) { return prec(x, y); },
      [](const Dyadic& x) { return endpoints(x).first; },
      [](const Dyadic& a1, const Dyadic& a2, const Dyadic& c) {
        return binary_interpolant(a1, a2, c);
      },
      [](const Dyadic& x) { return x.str(); },
  };
  auto report = scott::bases::check_abstract_basis(b);
  CHECK(report.ok());
  CHECK(report.checked_triples > 0);
  CHECK(report.nullary_witnesses.size() == 31);

  // A deliberately wrong nullary witness is caught.
  b.nullary = [](const Dyadic& x) { return x; };
  CHECK_FALSE(scott::bases::check_abstract_basis(b).nullary);
}
