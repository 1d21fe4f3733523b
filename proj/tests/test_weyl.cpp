#include <doctest.h>

#include "cck/weyl.hpp"

using namespace cck;

TEST_CASE("reducedness") {
  CartanDatum a2 = CartanDatum::builtin("A2");
  CHECK(is_reduced(a2, parse_word(a2, "1,2,1")));
  CHECK_FALSE(is_reduced(a2, parse_word(a2, "1,1")));
  CHECK(is_reduced(a2, {}));  // empty word

  try {
    beta_sequence(a2, parse_word(a2, "1,1"));
    FAIL("expected NotReducedError");
  } catch (const NotReducedError& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("beta sequence of an A3 word") {
  CartanDatum a3 = CartanDatum::builtin("A3");
  auto betas = beta_sequence(a3, parse_word(a3, "1,2,3,2,1"));
  std::vector<std::vector<Int>> expect = {
      {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {0, 0, 1}, {0, 1, 1}};
  REQUIRE(betas.size() == 5);
  for (std::size_t k = 0; k < 5; ++k) CHECK(betas[k].coeffs() == expect[k]);
  for (const auto& b : betas) CHECK(b.positive());
}

TEST_CASE("braid moves and Matsumoto closure") {
  CartanDatum a2 = CartanDatum::builtin("A2");
  auto nb = braid_neighbors(a2, parse_word(a2, "1,2,1"));
  CHECK(nb == std::set<Word>{parse_word(a2, "2,1,2")});
  CHECK(all_reduced_words(a2, parse_word(a2, "1,2,1")).size() == 2);

  CartanDatum a3 = CartanDatum::builtin("A3");
  CHECK(all_reduced_words(a3, parse_word(a3, "1,2,1,3,2,1")).size() == 16);
  CHECK_THROWS_AS(all_reduced_words(a3, parse_word(a3, "1,2,1,3,2,1"), 4), ExplosionGuardError);

  CartanDatum g2 = CartanDatum::builtin("G2");
  CHECK(braid_order(g2, 0, 1) == 6);
  CHECK(all_reduced_words(g2, parse_word(g2, "1,2,1,2,1,2")).size() == 2);

  // no braid relation on an infinite bond
  CartanDatum a11 = CartanDatum::builtin("A1^(1)");
  CHECK(braid_order(a11, 0, 1) == 0);
  CHECK(braid_neighbors(a11, parse_word(a11, "0,1,0")).empty());
  CHECK(all_reduced_words(a11, parse_word(a11, "0,1,0,1")).size() == 1);
}

TEST_CASE("word ending in a letter") {
  CartanDatum a3 = CartanDatum::builtin("A3");
  Word w = parse_word(a3, "1,2,3,2,1");
  Word v = word_ending_in(a3, w, a3.index_of("2"));
  CHECK(v.back() == a3.index_of("2"));
  CHECK(is_reduced(a3, v));
  CHECK(same_weyl_element(a3, v, w));

  CartanDatum a2 = CartanDatum::builtin("A2");
  CHECK_THROWS_AS(word_ending_in(a2, parse_word(a2, "1,2"), a2.index_of("1")), NoSuchWordError);

  Word s = word_starting_in(a3, w, a3.index_of("2"));
  CHECK(s.front() == a3.index_of("2"));
  CHECK(same_weyl_element(a3, s, w));
}

TEST_CASE("w-dominance") {
  CartanDatum a2 = CartanDatum::builtin("A2");
  Word w12 = parse_word(a2, "1,2");
  for (Idx i = 0; i < 2; ++i)
    CHECK(is_w_dominant(a2, a2.fundamental_weight(i), parse_word(a2, "1,2,1")));
  Weight s1L1 = a2.reflect(0, a2.fundamental_weight(0));
  CHECK(is_w_dominant(a2, s1L1, w12));
  CHECK_FALSE(is_w_dominant(a2, -a2.fundamental_weight(0), parse_word(a2, "1")));
}

TEST_CASE("inversion sums agree across a Matsumoto class") {
  CartanDatum b2 = CartanDatum::builtin("B2");
  Word w0 = parse_word(b2, "1,2,1,2");
  RootVec ref = RootVec::zero(2);
  for (const RootVec& b : beta_sequence(b2, w0)) ref = ref + b;
  for (const Word& v : all_reduced_words(b2, w0)) {
    RootVec s = RootVec::zero(2);
    for (const RootVec& b : beta_sequence(b2, v)) s = s + b;
    CHECK(s == ref);
    for (Idx i = 0; i < 2; ++i)
      CHECK(b2.act(v, b2.fundamental_weight(i)) == b2.act(w0, b2.fundamental_weight(i)));
  }
}
