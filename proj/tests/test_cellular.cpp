#include <doctest.h>

#include "cck/cellular.hpp"
#include "cck/subcrystal.hpp"

using namespace cck;

namespace {

CellularCrystal make(const char* type, const char* word) {
  CartanDatum d = CartanDatum::builtin(type);
  return CellularCrystal(d, ReducedWord(d, parse_word(d, word)));
}

}  // namespace

TEST_CASE("sigma on the A3 word") {
  CellularCrystal c = make("A3", "1,2,3,2,1");
  CellVec x{1, 0, 0, 0, 0};
  CHECK(c.sigma(x, 3) == 0);
  CHECK(c.sigma(x, 5) == 2);

  CellVec zero = c.zero();
  for (Idx i = 0; i < 3; ++i) {
    CHECK(c.sigma_tilde(i, zero) == CrystalValue(0));
    CHECK(c.argmax_positions(i, zero) == c.positions_of(i));
  }

  CellVec y{0, 0, 1, 1, 1};
  CHECK(c.sigma_tilde(0, y) == CrystalValue(0));
}

TEST_CASE("operator chains from the rank-3 example") {
  CellularCrystal c = make("A3", "1,2,3,2,1");
  auto f = [&](Idx i, const CellVec& x) { return *c.f_op(i, x); };
  CHECK(f(2, f(1, f(0, c.zero()))) == CellVec{0, 0, 1, 1, 1});
  CHECK(f(0, f(2, f(1, c.zero()))) == CellVec{1, 0, 1, 1, 0});
  CHECK(f(0, f(1, f(2, c.zero()))) == CellVec{1, 1, 1, 0, 0});
}

TEST_CASE("weights and statistics") {
  CellularCrystal c = make("A3", "1,2,3,2,1");
  CHECK(c.wt(c.zero()) == Weight::zero(3));
  for (Idx i = 0; i < 3; ++i) CHECK(c.eps(i, c.zero()) == CrystalValue(0));

  CellVec y{0, 0, 1, 1, 1};
  Weight expect = -(c.datum().simple_root(0) + c.datum().simple_root(1) +
                    c.datum().simple_root(2));
  CHECK(c.wt(y) == expect);
  CHECK(c.eps(0, y) == CrystalValue(0));

  // absent letter: -inf statistics, null operators
  CellularCrystal small = make("A3", "1,2,1");
  CHECK(small.eps(2, small.zero()).is_neg_inf());
  CHECK(small.phi(2, small.zero()).is_neg_inf());
  CHECK_FALSE(small.f_op(2, small.zero()).has_value());
  CHECK_FALSE(small.e_op(2, small.zero()).has_value());
}

TEST_CASE("programs") {
  CellularCrystal c = make("A2", "1,2,1");
  Program empty;
  CHECK(apply_program(c, {1, 2, 3}, empty) == CellVec{1, 2, 3});

  Program p = parse_program(c.datum(), "f2,f1");
  CHECK(apply_program(c, c.zero(), p) == CellVec{1, 1, 0});

  Program peel = parse_program(c.datum(), "emax1,emax2");
  std::vector<TraceEntry> trace;
  CHECK(apply_program(c, {1, 1, 0}, peel, &trace) == c.zero());
  CHECK(trace.size() == 2);
  CHECK(trace[0].op == "e");
  CHECK(trace[0].position == 1);

  Program powers = parse_program(c.datum(), "f1^3");
  CHECK(apply_program(c, c.zero(), powers) == CellVec{0, 0, 3});

  CHECK_THROWS_AS(parse_program(c.datum(), "q1"), ConfigError);
  CHECK_THROWS_AS(parse_program(c.datum(), "f9"), ConfigError);
  CellularCrystal small = make("A3", "1,2,1");
  Program absent = parse_program(small.datum(), "f3");
  CHECK_THROWS_AS(apply_program(small, small.zero(), absent), ConfigError);
}

TEST_CASE("h vectors") {
  CellularCrystal c = make("A2", "1,2,1");
  Weight L1 = c.datum().fundamental_weight(0);
  CHECK(c.h_exponents(L1) == std::vector<Int>{0, 1, 1});
  CHECK(c.h_vector(L1) == CellVec{0, 1, 1});
  CHECK(c.h_vector(Weight::zero(2)) == c.zero());
  CHECK_THROWS_AS(c.h_vector(-L1), NotDominantError);

  CellularCrystal a3 = make("A3", "1,2,3,2,1");
  Weight L = a3.datum().fundamental_weight(0);
  CHECK(a3.h_vector(L) == a3.central_cp(L));
}

TEST_CASE("central coordinates") {
  CellularCrystal c = make("A2", "1,2,1");
  CHECK(c.central_cp(Weight::zero(2)) == c.zero());
  CHECK(c.central_cp(c.datum().fundamental_weight(0)) == CellVec{0, 1, 1});

  CellularCrystal a3 = make("A3", "1,2,3,2,1");
  CHECK(a3.central_cp(a3.datum().fundamental_weight(0)) == CellVec{0, 0, 1, 1, 1});

  // linearity
  Weight lam = c.datum().fundamental_weight(0) - c.datum().simple_root(1).scaled(2);
  Weight mu = c.datum().fundamental_weight(1) + c.datum().simple_root(0);
  CellVec sum = c.central_cp(lam + mu);
  CellVec a = c.central_cp(lam), b = c.central_cp(mu);
  for (std::size_t k = 0; k < 3; ++k) CHECK(sum[k] == a[k] + b[k]);
}

TEST_CASE("central shift equivariance") {
  CellularCrystal c = make("A2", "1,2,1");
  Weight L1 = c.datum().fundamental_weight(0);
  CHECK(check_fC(c, Weight::zero(2), {0, 0, 0}, 0).pass);
  CHECK(check_fC(c, L1, {0, 1, 0}, 0).pass);

  // eps_1(CP(L1)) = -<h_1, w L1> = 0
  CHECK(c.eps(0, c.central_cp(L1)) == CrystalValue(0));
}

TEST_CASE("closed form matches the tensor rule on a small box") {
  CellularCrystal c = make("B2", "1,2,1,2");
  CellVec x(4, -2);
  bool more = true;
  while (more) {
    Elem elem = c.to_elem(x);
    CHECK(c.wt(x) == elem_wt(c.datum(), elem));
    for (Idx i = 0; i < 2; ++i) {
      CHECK(c.eps(i, x) == elem_eps(c.datum(), i, elem));
      CHECK(c.phi(i, x) == elem_phi(c.datum(), i, elem));
      CHECK(*c.f_op(i, x) == c.from_elem(*elem_f(c.datum(), i, elem)));
      CHECK(*c.e_op(i, x) == c.from_elem(*elem_e(c.datum(), i, elem)));
    }
    more = false;
    for (std::size_t k = 4; k-- > 0;) {
      if (x[k] < 2) {
        ++x[k];
        more = true;
        break;
      }
      x[k] = -2;
    }
  }
}

TEST_CASE("element conversion round trip") {
  CellularCrystal c = make("G2", "1,2,1,2,1,2");
  CellVec x{3, -1, 0, 2, -5, 1};
  CHECK(c.from_elem(c.to_elem(x)) == x);
  CHECK_THROWS_AS(c.from_elem(Elem::b(0, 1)), ConfigError);
}
