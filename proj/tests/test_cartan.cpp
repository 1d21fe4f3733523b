#include <doctest.h>

#include <nlohmann/json.hpp>

#include "cck/cartan.hpp"

using namespace cck;

TEST_CASE("A2 pairings and forms") {
  CartanDatum d = CartanDatum::builtin("A2");
  Weight L1 = d.fundamental_weight(0);
  CHECK(d.pairing(0, L1) == 1);
  CHECK(d.pairing(0, d.simple_root(1)) == -1);

  // form(a1+a2, L1 - a1 - a2) = -1
  Weight lam = L1 - d.simple_root(0) - d.simple_root(1);
  RootVec beta({1, 1});
  CHECK(d.form(beta, lam) == -1);
}

TEST_CASE("reflections and Weyl action") {
  CartanDatum d = CartanDatum::builtin("A2");
  Weight L1 = d.fundamental_weight(0);
  CHECK(d.reflect(0, L1) == L1 - d.simple_root(0));

  Word w{0, 1, 0};
  CHECK(d.act(w, L1) == L1 - d.simple_root(0) - d.simple_root(1));

  // involution, on a generic formal weight
  Weight mixed({2, -1}, {3, 5});
  for (Idx i = 0; i < 2; ++i) CHECK(d.reflect(i, d.reflect(i, mixed)) == mixed);
}

TEST_CASE("registry data are valid and canonical") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "E6", "E7", "E8", "F4", "G2"}) {
    CartanDatum d = CartanDatum::builtin(name);
    CHECK(d.finite_type());
    for (std::size_t i = 0; i < d.rank(); ++i)
      for (std::size_t j = 0; j < d.rank(); ++j)
        CHECK(d.d(i) * d.a(i, j) == d.d(j) * d.a(j, i));
  }
  CHECK(CartanDatum::builtin("G2").symmetrizers() == std::vector<Int>{3, 1});
  CHECK(CartanDatum::builtin("B2").symmetrizers() == std::vector<Int>{2, 1});
  CHECK_FALSE(CartanDatum::builtin("A1^(1)").finite_type());
  CHECK(CartanDatum::builtin("A1~").labels() == std::vector<std::string>{"0", "1"});
  CHECK_THROWS_AS(CartanDatum::builtin("Z9"), ConfigError);
}

TEST_CASE("positive root counts") {
  CHECK(CartanDatum::builtin("A2").positive_roots().size() == 3);
  CHECK(CartanDatum::builtin("A3").positive_roots().size() == 6);
  CHECK(CartanDatum::builtin("B2").positive_roots().size() == 4);
  CHECK(CartanDatum::builtin("G2").positive_roots().size() == 6);
  CHECK(CartanDatum::builtin("E6").positive_roots().size() == 36);
  CHECK_THROWS_AS(CartanDatum::builtin("A1^(1)").positive_roots(), ConfigError);
}

TEST_CASE("symmetrizer canonicalization and rejection") {
  // provided symmetrizers are reduced to the minimal ones
  CartanDatum scaled({"1", "2"}, {{2, -1}, {-2, 2}}, std::vector<Int>{4, 2});
  CHECK(scaled.symmetrizers() == std::vector<Int>{2, 1});

  // wrong symmetrizers rejected
  CHECK_THROWS_AS(CartanDatum({"1", "2"}, {{2, -1}, {-3, 2}}, std::vector<Int>{1, 1}),
                  ConfigError);

  // a cycle that admits no symmetrizer at all
  CHECK_THROWS_AS(CartanDatum({"1", "2", "3"},
                              {{2, -1, -2}, {-2, 2, -1}, {-1, -2, 2}}),
                  ConfigError);

  // axioms
  CHECK_THROWS_AS(CartanDatum({"1", "2"}, {{2, -1}, {0, 2}}), ConfigError);   // zero pattern
  CHECK_THROWS_AS(CartanDatum({"1", "2"}, {{1, -1}, {-1, 2}}), ConfigError);  // diagonal
  CHECK_THROWS_AS(CartanDatum({"1", "2"}, {{2, 1}, {1, 2}}), ConfigError);    // positive entry
  CHECK_THROWS_AS(CartanDatum({"1", "1"}, {{2, -1}, {-1, 2}}), ConfigError);  // label clash
}

TEST_CASE("json round trip") {
  nlohmann::json j = {{"labels", {"1", "2"}}, {"matrix", {{2, -1}, {-1, 2}}}};
  CartanDatum d = CartanDatum::from_json(j);
  CHECK(d.symmetrizers() == std::vector<Int>{1, 1});
  nlohmann::json out = d.to_json();
  CartanDatum back = CartanDatum::from_json(out);
  CHECK(back == d);
  CHECK(d.index_of("2") == 1);
  CHECK_THROWS_AS(d.index_of("3"), ConfigError);
}

TEST_CASE("dominance and weight arithmetic") {
  CartanDatum d = CartanDatum::builtin("A2");
  CHECK(d.dominant(d.fundamental_weight(0)));
  CHECK(d.dominant(Weight::zero(2)));
  CHECK_FALSE(d.dominant(-d.fundamental_weight(0)));
  Weight a = d.fundamental_weight(0) + d.simple_root(1).scaled(3);
  CHECK(a - a == Weight::zero(2));
  CHECK((-a).lam()[0] == -1);
}
