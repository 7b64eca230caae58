#include <doctest.h>

#include "generators.hpp"
#include "scott/wtree.hpp"

using namespace scott::wtree;
using scott::testing::Rng;

TEST_CASE("signature validation") {
  CHECK_THROWS_AS(Signature({"a", "a"}, {}), SignatureError);
  CHECK_THROWS_AS(Signature({"a"}, {{"c", "b", {}}}), SignatureError);
  CHECK_THROWS_AS(Signature({"a"}, {{"c", "a", {"b"}}}), SignatureError);
  CHECK_THROWS_AS(Signature({"a"}, {{"c", "a", {}}, {"c", "a", {"a"}}}), SignatureError);
  auto sig = scott::testing::list_signature();
  CHECK(sig.has_sort("list"));
  CHECK_FALSE(sig.has_sort("tree"));
  REQUIRE(sig.find("cons") != nullptr);
  CHECK(sig.find("cons")->args.size() == 2);
  CHECK(sig.find("snoc") == nullptr);
}

TEST_CASE("validate_tree finds the first ill-sorted node") {
  auto sig = scott::testing::list_signature();
  auto good = node("cons", {node("s", {leaf("z")}), leaf("nil")});
  CHECK_FALSE(validate_tree(sig, "list", good).has_value());
  CHECK(validate_tree(sig, "nat", good).has_value());

  auto wrong_sort = node("cons", {leaf("nil"), leaf("nil")});
  auto e = validate_tree(sig, "list", wrong_sort);
  REQUIRE(e.has_value());
  CHECK(e->path == Path{0});

  auto wrong_arity = node("cons", {leaf("z"), node("s", {leaf("z"), leaf("z")})});
  e = validate_tree(sig, "list", wrong_arity);
  REQUIRE(e.has_value());
  CHECK(e->path == Path{1});

  auto unknown = node("cons", {node("s", {leaf("q")}), leaf("nil")});
  e = validate_tree(sig, "list", unknown);
  REQUIRE(e.has_value());
  CHECK(e->path == Path{0, 0});
  CHECK(render_path(e->path) == "/0/0");
}

TEST_CASE("decide_equal returns the first differing node") {
  auto sig = scott::testing::list_signature();
  auto a = node("cons", {node("s", {leaf("z")}), leaf("nil")});
  auto b = node("cons", {node("s", {leaf("z")}), node("cons", {leaf("z"), leaf("nil")})});
  CHECK(is_equal(decide_equal(sig, a, a)));
  auto d = decide_equal(sig, a, b);
  REQUIRE(std::holds_alternative<Unequal>(d));
  CHECK(std::get<Unequal>(d).path == Path{1});
  auto c = node("cons", {node("s", {node("s", {leaf("z")})}), leaf("append")});
  CHECK_THROWS_AS(decide_equal(sig, a, c), SignatureError);
  CHECK_THROWS_AS(decide_equal(sig, a, leaf("z")), SignatureError);
  CHECK(render(a) == "cons(s(z),nil)");
}

TEST_CASE("decide_equal agrees with structural recursion on random pairs") {
  Rng rng(21);
  auto sig = scott::testing::list_signature();
  std::size_t equal = 0;
  for (int i = 0; i < 3000; ++i) {
    const std::string sort = rng.coin() ? "nat" : "list";
    const std::size_t depth = rng.below(7);
    auto a = scott::testing::random_tree(rng, sig, sort, depth);
    auto b = rng.coin(0.3)   ? a
             : rng.coin(0.5) ? scott::testing::mutate_tree(rng, sig, sort, a, depth)
                             : scott::testing::random_tree(rng, sig, sort, depth);
    auto d = decide_equal(sig, a, b);
    const bool oracle = scott::testing::tree_eq_oracle(a, b);
    CHECK(is_equal(d) == oracle);
    equal += oracle;
    if (auto* u = std::get_if<Unequal>(&d)) {
      // Follow the path: the labels there differ and agree on the way down.
      const WTree* x = &a;
      const WTree* y = &b;
      for (std::size_t k : u->path) {
        CHECK(x->label == y->label);
        x = &x->children.at(k);
        y = &y->children.at(k);
      }
      CHECK(x->label != y->label);
    }
  }
  CHECK(equal > 500);
}
