#include <doctest.h>

#include "cck/crystal.hpp"

using namespace cck;

TEST_CASE("crystal values with minus infinity") {
  CrystalValue inf = CrystalValue::neg_inf();
  CHECK((inf + 5).is_neg_inf());
  CHECK(max(inf, CrystalValue(-7)) == CrystalValue(-7));
  CHECK(max(CrystalValue(3), inf) == CrystalValue(3));
  CHECK(inf == CrystalValue::neg_inf());
  CHECK(inf < CrystalValue(-100));
  CHECK_THROWS_AS(inf.value(), Error);
}

TEST_CASE("elementary crystal structure") {
  CartanDatum a2 = CartanDatum::builtin("A2");
  Elem b = Elem::b(0, -2);  // (-2)_1
  CHECK(elem_wt(a2, b) == a2.simple_root(0).scaled(-2));
  CHECK(elem_eps(a2, 0, b) == CrystalValue(2));
  CHECK(elem_phi(a2, 0, b) == CrystalValue(-2));
  CHECK(elem_eps(a2, 1, b).is_neg_inf());
  CHECK(*elem_e(a2, 0, b) == Elem::b(0, -1));
  CHECK(*elem_f(a2, 0, b) == Elem::b(0, -3));
  CHECK_FALSE(elem_e(a2, 1, b).has_value());

  Elem t = Elem::t(a2.fundamental_weight(0));
  CHECK(elem_wt(a2, t) == a2.fundamental_weight(0));
  CHECK(elem_eps(a2, 0, t).is_neg_inf());
  CHECK_FALSE(elem_f(a2, 0, t).has_value());
}

TEST_CASE("tensor statistics") {
  CartanDatum a1 = CartanDatum::builtin("A1");
  Elem z = Elem::b(0, 0);
  CHECK(elem_eps(a1, 0, Elem::tensor({z, z})) == CrystalValue(0));
  CHECK(elem_eps(a1, 0, Elem::tensor({z, Elem::b(0, -2)})) == CrystalValue(2));

  // b (x) t_lam keeps eps of b
  CartanDatum a2 = CartanDatum::builtin("A2");
  Elem bt = Elem::tensor({Elem::b(0, -2), Elem::t(a2.fundamental_weight(1))});
  CHECK(elem_eps(a2, 0, bt) == CrystalValue(2));
}

TEST_CASE("tensor operators") {
  CartanDatum a1 = CartanDatum::builtin("A1");
  Elem z = Elem::b(0, 0);
  Elem zz = Elem::tensor({z, z});
  CHECK(*elem_f(a1, 0, zz) == Elem::tensor({z, Elem::b(0, -1)}));
  CHECK(*elem_e(a1, 0, Elem::tensor({z, Elem::b(0, -1)})) == zz);

  // f acts through t_lam on the left factor, dying with it
  CartanDatum a2 = CartanDatum::builtin("A2");
  Elem bt = Elem::tensor({Elem::b(0, 0), Elem::t(Weight::zero(2))});
  ElemOpt fbt = elem_f(a2, 0, bt);
  REQUIRE(fbt.has_value());
  CHECK(fbt->parts()[0] == Elem::b(0, -1));
  CHECK_FALSE(elem_f(a2, 1, bt).has_value());  // neither factor carries color 2
}

TEST_CASE("axiom checker") {
  CartanDatum a2 = CartanDatum::builtin("A2");
  CrystalOps ops = generic_ops(a2);
  std::vector<Elem> window;
  for (Int n = -3; n <= 3; ++n) window.push_back(Elem::b(0, n));
  CHECK(axiom_check(ops, window).ok());

  std::vector<Elem> box;
  for (Int m = -2; m <= 2; ++m)
    for (Int n = -2; n <= 2; ++n) box.push_back(Elem::tensor({Elem::b(0, m), Elem::b(1, n)}));
  CHECK(axiom_check(ops, box).ok());

  CrystalOps broken = ops;
  broken.eps = [a2](Idx i, const Elem& b) {
    CrystalValue v = elem_eps(a2, i, b);
    return v.finite() ? CrystalValue(v.value() + 1) : v;
  };
  CheckReport rep = axiom_check(broken, window);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("morphism checker") {
  CartanDatum a2 = CartanDatum::builtin("A2");
  CrystalOps ops = generic_ops(a2);
  std::vector<std::pair<Elem, Elem>> ident;
  for (Int n = -3; n <= 3; ++n) ident.emplace_back(Elem::b(0, n), Elem::b(0, n));
  CHECK(morphism_check(ops, ops, ident, true).ok());

  std::vector<std::pair<Elem, Elem>> bad{{Elem::b(0, 0), Elem::b(0, 1)}};
  CheckReport rep = morphism_check(ops, ops, bad, false);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("flatten erases nesting") {
  Elem b1 = Elem::b(0, 1), b2 = Elem::b(1, 2), b3 = Elem::b(0, 3);
  Elem left = Elem::tensor({Elem::tensor({b1, b2}), b3});
  Elem right = Elem::tensor({b1, Elem::tensor({b2, b3})});
  CHECK(left.flatten() == right.flatten());
  CHECK_FALSE(left == right);
}
