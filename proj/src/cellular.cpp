#include "cck/cellular.hpp"

#include <algorithm>
#include <sstream>

namespace cck {

std::string to_string(const CellVec& x) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) os << ",";
    os << x[k];
  }
  os << ")";
  return os.str();
}

CellularCrystal::CellularCrystal(CartanDatum datum, ReducedWord word)
    : datum_(std::move(datum)), word_(std::move(word)) {
  if (word_.length() == 0) throw ConfigError("cellular crystal needs a nonempty word");
  const std::size_t l = word_.length();
  coupling_.assign(l, std::vector<Int>(l, 0));
  for (std::size_t k = 0; k < l; ++k)
    for (std::size_t j = 0; j < l; ++j)
      coupling_[k][j] = datum_.a(word_.letter(k), word_.letter(j));
  positions_.assign(datum_.rank(), {});
  for (std::size_t k = 0; k < l; ++k) positions_[word_.letter(k)].push_back(k + 1);
}

void CellularCrystal::check_size(const CellVec& x) const {
  if (x.size() != length()) throw ConfigError("vector length does not match the word");
}

Int CellularCrystal::sigma(const CellVec& x, std::size_t k) const {
  check_size(x);
  if (k < 1 || k > length()) throw ConfigError("sigma position out of range");
  Int v = x[k - 1];
  for (std::size_t j = 0; j + 1 < k; ++j)
    v = checked_add(v, checked_mul(coupling_[k - 1][j], x[j]));
  return v;
}

CrystalValue CellularCrystal::sigma_tilde(Idx i, const CellVec& x) const {
  check_size(x);
  if (i >= datum_.rank()) throw ConfigError("index out of range");
  if (!letter_present(i)) return CrystalValue::neg_inf();
  Int best = 0;
  bool first = true;
  for (std::size_t k : positions_[i]) {
    Int s = sigma(x, k);
    if (first || s > best) best = s;
    first = false;
  }
  return CrystalValue(best);
}

std::vector<std::size_t> CellularCrystal::argmax_positions(Idx i, const CellVec& x) const {
  std::vector<std::size_t> out;
  CrystalValue st = sigma_tilde(i, x);
  if (st.is_neg_inf()) return out;
  for (std::size_t k : positions_[i])
    if (sigma(x, k) == st.value()) out.push_back(k);
  return out;
}

std::optional<std::size_t> CellularCrystal::m_f(Idx i, const CellVec& x) const {
  auto m = argmax_positions(i, x);
  if (m.empty()) return std::nullopt;
  return m.back();
}

std::optional<std::size_t> CellularCrystal::m_e(Idx i, const CellVec& x) const {
  auto m = argmax_positions(i, x);
  if (m.empty()) return std::nullopt;
  return m.front();
}

std::optional<CellVec> CellularCrystal::f_op(Idx i, const CellVec& x) const {
  auto k = m_f(i, x);
  if (!k) return std::nullopt;
  CellVec y = x;
  y[*k - 1] = checked_add(y[*k - 1], 1);
  return y;
}

std::optional<CellVec> CellularCrystal::e_op(Idx i, const CellVec& x) const {
  auto k = m_e(i, x);
  if (!k) return std::nullopt;
  CellVec y = x;
  y[*k - 1] = checked_sub(y[*k - 1], 1);
  return y;
}

std::optional<CellVec> CellularCrystal::f_pow(Idx i, Int n, const CellVec& x) const {
  if (!letter_present(i)) return std::nullopt;
  CellVec y = x;
  for (Int t = 0; t < (n < 0 ? -n : n); ++t) y = n > 0 ? *f_op(i, y) : *e_op(i, y);
  return y;
}

Weight CellularCrystal::wt(const CellVec& x) const {
  check_size(x);
  std::vector<Int> rt(datum_.rank(), 0);
  for (std::size_t k = 0; k < length(); ++k) {
    Idx i = word_.letter(k);
    rt[i] = checked_sub(rt[i], x[k]);
  }
  return Weight(std::vector<Int>(datum_.rank(), 0), std::move(rt));
}

CrystalValue CellularCrystal::eps(Idx i, const CellVec& x) const { return sigma_tilde(i, x); }

CrystalValue CellularCrystal::phi(Idx i, const CellVec& x) const {
  CrystalValue e = eps(i, x);
  if (e.is_neg_inf()) return e;
  return e + datum_.pairing(i, wt(x));
}

Elem CellularCrystal::to_elem(const CellVec& x) const {
  check_size(x);
  std::vector<Elem> parts;
  parts.reserve(length());
  for (std::size_t k = 0; k < length(); ++k)
    parts.push_back(Elem::b(word_.letter(k), checked_neg(x[k])));
  return Elem::tensor(std::move(parts));
}

CellVec CellularCrystal::from_elem(const Elem& b) const {
  std::vector<Elem> parts = b.flatten();
  if (parts.size() != length()) throw ConfigError("element does not match the word length");
  CellVec x(length());
  for (std::size_t k = 0; k < length(); ++k) {
    if (!parts[k].is_b() || parts[k].as_b().i != word_.letter(k))
      throw ConfigError("element factors do not match the word letters");
    x[k] = checked_neg(parts[k].as_b().n);
  }
  return x;
}

std::vector<Int> CellularCrystal::h_exponents(const Weight& Lambda) const {
  if (!datum_.dominant(Lambda)) throw NotDominantError();
  std::vector<Int> m(length());
  Weight mu = Lambda;  // s_{i_{k+1}} ... s_{i_l} Lambda, built right to left
  for (std::size_t k = length(); k-- > 0;) {
    m[k] = datum_.pairing(word_.letter(k), mu);
    mu = datum_.reflect(word_.letter(k), mu);
  }
  return m;
}

CellVec CellularCrystal::h_vector(const Weight& Lambda) const {
  std::vector<Int> m = h_exponents(Lambda);
  CellVec x = zero();
  for (std::size_t k = length(); k-- > 0;) x = *f_pow(word_.letter(k), m[k], x);
  return x;
}

CellVec CellularCrystal::central_cp(const Weight& lam) const {
  Word letters = word_.letters();
  Weight wl = datum_.act(letters, lam);
  CellVec out(length());
  for (std::size_t k = 0; k < length(); ++k) {
    const RootVec& beta = word_.betas()[k];
    Int norm2 = datum_.form_rr(beta, beta);
    if (norm2 <= 0 || norm2 % 2 != 0) throw NonIntegralCorootError();
    Int d_beta = norm2 / 2;
    Int val = datum_.form(beta, wl);
    if (val % d_beta != 0) throw NonIntegralCorootError();
    out[k] = checked_neg(val / d_beta);
  }
  return out;
}

CrystalOps cellular_ops(const CellularCrystal& c) {
  auto cc = std::make_shared<CellularCrystal>(c);
  CrystalOps ops;
  ops.rank = cc->datum().rank();
  ops.wt = [cc](const Elem& b) { return cc->wt(cc->from_elem(b)); };
  ops.eps = [cc](Idx i, const Elem& b) { return cc->eps(i, cc->from_elem(b)); };
  ops.phi = [cc](Idx i, const Elem& b) { return cc->phi(i, cc->from_elem(b)); };
  ops.e = [cc](Idx i, const Elem& b) -> ElemOpt {
    auto y = cc->e_op(i, cc->from_elem(b));
    if (!y) return std::nullopt;
    return cc->to_elem(*y);
  };
  ops.f = [cc](Idx i, const Elem& b) -> ElemOpt {
    auto y = cc->f_op(i, cc->from_elem(b));
    if (!y) return std::nullopt;
    return cc->to_elem(*y);
  };
  ops.pairing = [cc](Idx i, const Weight& w) { return cc->datum().pairing(i, w); };
  ops.alpha = [cc](Idx i) { return cc->datum().simple_root(i); };
  return ops;
}

FCReport check_fC(const CellularCrystal& c, const Weight& lam, const CellVec& b, Idx i) {
  FCReport rep;
  auto fail = [&](const std::string& what) {
    rep.pass = false;
    rep.failures.push_back(what + " [lam=" + to_string(lam, c.datum()) + ", b=" + to_string(b) +
                           ", i=" + c.datum().label(i) + "]");
  };
  if (!c.letter_present(i)) {
    fail("index absent from word");
    return rep;
  }
  CellVec cp = c.central_cp(lam);
  CellVec shifted(cp.size());
  for (std::size_t k = 0; k < cp.size(); ++k) shifted[k] = checked_add(cp[k], b[k]);

  CellVec lhs_f = *c.f_op(i, shifted);
  CellVec fb = *c.f_op(i, b);
  CellVec rhs_f(cp.size());
  for (std::size_t k = 0; k < cp.size(); ++k) rhs_f[k] = checked_add(cp[k], fb[k]);
  if (lhs_f != rhs_f)
    fail("f(CP + b) = " + to_string(lhs_f) + " but CP + f(b) = " + to_string(rhs_f));

  CellVec lhs_e = *c.e_op(i, shifted);
  CellVec eb = *c.e_op(i, b);
  CellVec rhs_e(cp.size());
  for (std::size_t k = 0; k < cp.size(); ++k) rhs_e[k] = checked_add(cp[k], eb[k]);
  if (lhs_e != rhs_e)
    fail("e(CP + b) = " + to_string(lhs_e) + " but CP + e(b) = " + to_string(rhs_e));

  Word letters = c.word().letters();
  Int expected = checked_neg(c.datum().pairing(i, c.datum().act(letters, lam)));
  CrystalValue eps_cp = c.eps(i, cp);
  if (!(eps_cp == CrystalValue(expected)))
    fail("eps_i(CP) = " + eps_cp.str() + " but -<h_i, w lam> = " + std::to_string(expected));
  return rep;
}

Program parse_program(const CartanDatum& datum, const std::string& text) {
  Program prog;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    auto b = token.find_first_not_of(" \t");
    auto e = token.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    token = token.substr(b, e - b + 1);

    ProgStep step;
    std::string rest;
    if (token.rfind("emax", 0) == 0) {
      step.op = ProgOp::E;
      step.max_count = true;
      rest = token.substr(4);
    } else if (token.rfind("fs", 0) == 0) {
      step.op = ProgOp::FStar;
      rest = token.substr(2);
    } else if (token.rfind("es", 0) == 0) {
      step.op = ProgOp::EStar;
      rest = token.substr(2);
    } else if (token.rfind("f", 0) == 0) {
      step.op = ProgOp::F;
      rest = token.substr(1);
    } else if (token.rfind("e", 0) == 0) {
      step.op = ProgOp::E;
      rest = token.substr(1);
    } else {
      throw ConfigError("cannot parse program step '" + token + "'");
    }
    // optional repetition suffix: f1^3
    if (auto caret = rest.find('^'); caret != std::string::npos) {
      if (step.max_count) throw ConfigError("emax takes no repetition count");
      try {
        step.count = std::stoll(rest.substr(caret + 1));
      } catch (...) {
        throw ConfigError("bad repetition count in '" + token + "'");
      }
      if (step.count < 0) throw ConfigError("negative repetition count in '" + token + "'");
      rest = rest.substr(0, caret);
    }
    if (rest.empty()) throw ConfigError("program step '" + token + "' is missing an index");
    step.i = datum.index_of(rest);
    prog.push_back(step);
  }
  return prog;
}

}  // namespace cck
