#include "cck/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cck {

// ---------------------------------------------------------------- Weight

Weight::Weight(std::vector<Int> lam, std::vector<Int> rt)
    : lam_(std::move(lam)), rt_(std::move(rt)) {
  if (lam_.size() != rt_.size()) throw ConfigError("weight parts have mismatched ranks");
}

Weight Weight::zero(std::size_t rank) {
  return Weight(std::vector<Int>(rank, 0), std::vector<Int>(rank, 0));
}

bool Weight::is_zero() const {
  auto z = [](Int v) { return v == 0; };
  return std::all_of(lam_.begin(), lam_.end(), z) && std::all_of(rt_.begin(), rt_.end(), z);
}

Weight Weight::operator+(const Weight& o) const {
  std::vector<Int> l(lam_.size()), r(rt_.size());
  for (std::size_t i = 0; i < lam_.size(); ++i) {
    l[i] = checked_add(lam_[i], o.lam_[i]);
    r[i] = checked_add(rt_[i], o.rt_[i]);
  }
  return Weight(std::move(l), std::move(r));
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const {
  std::vector<Int> l(lam_.size()), r(rt_.size());
  for (std::size_t i = 0; i < lam_.size(); ++i) {
    l[i] = checked_neg(lam_[i]);
    r[i] = checked_neg(rt_[i]);
  }
  return Weight(std::move(l), std::move(r));
}

Weight Weight::scaled(Int c) const {
  std::vector<Int> l(lam_.size()), r(rt_.size());
  for (std::size_t i = 0; i < lam_.size(); ++i) {
    l[i] = checked_mul(lam_[i], c);
    r[i] = checked_mul(rt_[i], c);
  }
  return Weight(std::move(l), std::move(r));
}

bool Weight::operator<(const Weight& o) const {
  if (lam_ != o.lam_) return lam_ < o.lam_;
  return rt_ < o.rt_;
}

// --------------------------------------------------------------- RootVec

RootVec RootVec::simple(std::size_t rank, Idx i) {
  std::vector<Int> c(rank, 0);
  c[i] = 1;
  return RootVec(std::move(c));
}

Int RootVec::height() const {
  Int h = 0;
  for (Int c : coeffs_) h = checked_add(h, c < 0 ? -c : c);
  return h;
}

bool RootVec::positive() const {
  bool nonzero = false;
  for (Int c : coeffs_) {
    if (c < 0) return false;
    if (c > 0) nonzero = true;
  }
  return nonzero;
}

RootVec RootVec::operator+(const RootVec& o) const {
  std::vector<Int> c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = checked_add(coeffs_[i], o.coeffs_[i]);
  return RootVec(std::move(c));
}

// ------------------------------------------------------------ CartanDatum

CartanDatum::CartanDatum(std::vector<std::string> labels, std::vector<std::vector<Int>> matrix,
                         std::optional<std::vector<Int>> symmetrizers)
    : labels_(std::move(labels)), matrix_(std::move(matrix)) {
  validate();
  canonicalize_symmetrizers(symmetrizers);
  finite_type_ = compute_finite_type();
}

void CartanDatum::validate() const {
  const std::size_t n = labels_.size();
  if (n == 0) throw ConfigError("empty index set");
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n)
    throw ConfigError("duplicate labels in index set");
  if (matrix_.size() != n) throw ConfigError("matrix size does not match index set");
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix_[i].size() != n) throw ConfigError("matrix is not square");
    if (matrix_[i][i] != 2) throw ConfigError("diagonal entry is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (matrix_[i][j] > 0) throw ConfigError("positive off-diagonal entry");
      if ((matrix_[i][j] == 0) != (matrix_[j][i] == 0))
        throw ConfigError("zero pattern is not symmetric");
    }
  }
}

namespace {

Int gcd_int(Int a, Int b) { return std::gcd(a, b); }

struct Rational {
  Int num = 1, den = 1;  // den > 0
  void reduce() {
    Int g = gcd_int(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
};

}  // namespace

void CartanDatum::canonicalize_symmetrizers(const std::optional<std::vector<Int>>& given) {
  const std::size_t n = rank();
  if (given) {
    if (given->size() != n) throw ConfigError("symmetrizer size does not match index set");
    for (Int d : *given)
      if (d <= 0) throw ConfigError("symmetrizers must be positive");
    sym_ = *given;
  } else {
    // Propagate d_j = d_i a_ij / a_ji over each connected component, then
    // clear denominators; the minimal solution has component gcd 1.
    std::vector<Rational> r(n, Rational{0, 1});
    std::vector<Int> comp(n, -1);
    Int comp_count = 0;
    for (std::size_t start = 0; start < n; ++start) {
      if (comp[start] >= 0) continue;
      Int c = comp_count++;
      r[start] = {1, 1};
      comp[start] = c;
      std::queue<std::size_t> q;
      q.push(start);
      while (!q.empty()) {
        std::size_t i = q.front();
        q.pop();
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j || matrix_[i][j] == 0 || comp[j] >= 0) continue;
          comp[j] = c;
          Rational rj{checked_mul(r[i].num, matrix_[i][j]), checked_mul(r[i].den, matrix_[j][i])};
          if (rj.den < 0) {
            rj.num = -rj.num;
            rj.den = -rj.den;
          }
          rj.reduce();
          r[j] = rj;
          q.push(j);
        }
      }
    }
    sym_.assign(n, 1);
    for (Int c = 0; c < comp_count; ++c) {
      Int lcm = 1;
      for (std::size_t i = 0; i < n; ++i)
        if (comp[i] == c) lcm = checked_mul(lcm / gcd_int(lcm, r[i].den), r[i].den);
      for (std::size_t i = 0; i < n; ++i)
        if (comp[i] == c) sym_[i] = checked_mul(r[i].num, lcm / r[i].den);
    }
  }
  // Validate symmetrizability, then reduce each component by its gcd so the
  // stored d is the canonical minimal one even when symmetrizers were given.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (checked_mul(sym_[i], matrix_[i][j]) != checked_mul(sym_[j], matrix_[j][i]))
        throw ConfigError("matrix is not symmetrizable by the given/derived symmetrizers");
  std::vector<Int> comp(n, -1);
  for (std::size_t start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<std::size_t> members;
    std::queue<std::size_t> q;
    q.push(start);
    comp[start] = 1;
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop();
      members.push_back(i);
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && matrix_[i][j] != 0 && comp[j] < 0) {
          comp[j] = 1;
          q.push(j);
        }
    }
    Int g = 0;
    for (std::size_t i : members) g = gcd_int(g, sym_[i]);
    if (g > 1)
      for (std::size_t i : members) sym_[i] /= g;
  }
}

namespace {

// Fraction-free determinant (Bareiss); exact for the small ranks in scope.
Int bareiss_det(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  Int prev = 1;
  Int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = checked_sub(checked_mul(m[i][j], m[k][k]), checked_mul(m[i][k], m[k][j])) / prev;
    prev = m[k][k];
  }
  return checked_mul(sign, m[n - 1][n - 1]);
}

}  // namespace

bool CartanDatum::compute_finite_type() const {
  // Sylvester on the symmetrized matrix (d_i a_ij).
  const std::size_t n = rank();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = checked_mul(sym_[i], matrix_[i][j]);
    if (bareiss_det(std::move(sub)) <= 0) return false;
  }
  return true;
}

Idx CartanDatum::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw ConfigError("unknown index label '" + std::string(label) + "'");
}

Weight CartanDatum::fundamental_weight(Idx i) const {
  std::vector<Int> lam(rank(), 0), rt(rank(), 0);
  lam[i] = 1;
  return Weight(std::move(lam), std::move(rt));
}

Weight CartanDatum::simple_root(Idx i) const {
  std::vector<Int> lam(rank(), 0), rt(rank(), 0);
  rt[i] = 1;
  return Weight(std::move(lam), std::move(rt));
}

Int CartanDatum::pairing(Idx i, const Weight& w) const {
  if (i >= rank()) throw ConfigError("index out of range");
  Int v = w.lam()[i];
  for (std::size_t j = 0; j < rank(); ++j)
    v = checked_add(v, checked_mul(matrix_[i][j], w.rt()[j]));
  return v;
}

Int CartanDatum::form(const RootVec& beta, const Weight& w) const {
  Int v = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (beta.coeffs()[i] == 0) continue;
    v = checked_add(v, checked_mul(checked_mul(beta.coeffs()[i], sym_[i]), pairing(i, w)));
  }
  return v;
}

Int CartanDatum::form_rr(const RootVec& beta, const RootVec& gamma) const {
  Int v = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (beta.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j)
      v = checked_add(v, checked_mul(checked_mul(beta.coeffs()[i], gamma.coeffs()[j]),
                                     checked_mul(sym_[i], matrix_[i][j])));
  }
  return v;
}

Weight CartanDatum::reflect(Idx i, const Weight& w) const {
  Int c = pairing(i, w);
  std::vector<Int> rt = w.rt();
  rt[i] = checked_sub(rt[i], c);
  return Weight(w.lam(), std::move(rt));
}

Weight CartanDatum::act(std::span<const Idx> word, const Weight& w) const {
  Weight v = w;
  for (std::size_t k = word.size(); k-- > 0;) v = reflect(word[k], v);
  return v;
}

RootVec CartanDatum::reflect_root(Idx i, const RootVec& b) const {
  Int c = 0;
  for (std::size_t j = 0; j < rank(); ++j)
    c = checked_add(c, checked_mul(matrix_[i][j], b.coeffs()[j]));
  std::vector<Int> out = b.coeffs();
  out[i] = checked_sub(out[i], c);
  return RootVec(std::move(out));
}

RootVec CartanDatum::act_root(std::span<const Idx> word, const RootVec& b) const {
  RootVec v = b;
  for (std::size_t k = word.size(); k-- > 0;) v = reflect_root(word[k], v);
  return v;
}

bool CartanDatum::dominant(const Weight& w) const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (pairing(i, w) < 0) return false;
  return true;
}

std::vector<RootVec> CartanDatum::positive_roots() const {
  if (!finite_type_) throw ConfigError("positive root enumeration requires a finite-type datum");
  std::set<RootVec> seen;
  std::queue<RootVec> q;
  for (std::size_t i = 0; i < rank(); ++i) {
    RootVec a = RootVec::simple(rank(), i);
    seen.insert(a);
    q.push(a);
  }
  while (!q.empty()) {
    RootVec b = q.front();
    q.pop();
    for (std::size_t i = 0; i < rank(); ++i) {
      RootVec c = reflect_root(i, b);
      if (c.positive() && seen.insert(c).second) q.push(c);
    }
    if (seen.size() > 1'000'000) throw ConfigError("positive root closure diverged");
  }
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------- registry

namespace {

std::vector<std::string> numeric_labels(std::size_t n, int first = 1) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(first + static_cast<int>(i)));
  return out;
}

std::vector<std::vector<Int>> chain_matrix(std::size_t n) {
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = 2;
    if (i + 1 < n) {
      m[i][i + 1] = -1;
      m[i + 1][i] = -1;
    }
  }
  return m;
}

}  // namespace

CartanDatum CartanDatum::builtin(std::string_view name) {
  std::string s(name);
  if (s == "A1^(1)" || s == "A1~") {
    return CartanDatum({"0", "1"}, {{2, -2}, {-2, 2}});
  }
  if (s.size() >= 2) {
    char family = s[0];
    std::size_t n = 0;
    try {
      n = static_cast<std::size_t>(std::stoul(s.substr(1)));
    } catch (...) {
      throw ConfigError("unknown Cartan type '" + s + "'");
    }
    if (family == 'A' && n >= 1) return CartanDatum(numeric_labels(n), chain_matrix(n));
    if (family == 'B' && n >= 2) {
      auto m = chain_matrix(n);
      m[n - 1][n - 2] = -2;  // alpha_n short
      return CartanDatum(numeric_labels(n), std::move(m));
    }
    if (family == 'C' && n >= 2) {
      auto m = chain_matrix(n);
      m[n - 2][n - 1] = -2;  // alpha_n long
      return CartanDatum(numeric_labels(n), std::move(m));
    }
    if (family == 'D' && n >= 3) {
      auto m = chain_matrix(n - 1);
      for (auto& row : m) row.push_back(0);
      m.push_back(std::vector<Int>(n, 0));
      m[n - 1][n - 1] = 2;
      m[n - 3][n - 1] = -1;
      m[n - 1][n - 3] = -1;
      return CartanDatum(numeric_labels(n), std::move(m));
    }
    if (family == 'E' && (n == 6 || n == 7 || n == 8)) {
      // Bourbaki numbering: chain 1-3-4-5-...-n with node 2 attached to 4.
      std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
      for (std::size_t i = 0; i < n; ++i) m[i][i] = 2;
      auto link = [&](std::size_t a, std::size_t b) {
        m[a - 1][b - 1] = -1;
        m[b - 1][a - 1] = -1;
      };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (std::size_t k = 4; k < n; ++k) link(k, k + 1);
      return CartanDatum(numeric_labels(n), std::move(m));
    }
    if (family == 'F' && n == 4) {
      std::vector<std::vector<Int>> m = chain_matrix(4);
      m[2][1] = -2;  // alpha_3, alpha_4 short
      return CartanDatum(numeric_labels(4), std::move(m));
    }
    if (family == 'G' && n == 2) {
      return CartanDatum(numeric_labels(2), {{2, -1}, {-3, 2}});
    }
  }
  throw ConfigError("unknown Cartan type '" + s + "'");
}

// -------------------------------------------------------------------- json

CartanDatum CartanDatum::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("labels") || !j.contains("matrix"))
    throw ConfigError("Cartan JSON needs 'labels' and 'matrix'");
  std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
  std::vector<std::vector<Int>> matrix = j.at("matrix").get<std::vector<std::vector<Int>>>();
  std::optional<std::vector<Int>> sym;
  if (j.contains("symmetrizers")) sym = j.at("symmetrizers").get<std::vector<Int>>();
  return CartanDatum(std::move(labels), std::move(matrix), std::move(sym));
}

nlohmann::json CartanDatum::to_json() const {
  return nlohmann::json{{"labels", labels_}, {"matrix", matrix_}, {"symmetrizers", sym_}};
}

// ------------------------------------------------------------------ print

std::string to_string(const Weight& w, const CartanDatum& datum) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](Int c, const std::string& sym) {
    if (c == 0) return;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Int a = c < 0 ? -c : c;
    if (a != 1) os << a << "*";
    os << sym;
    first = false;
  };
  for (std::size_t i = 0; i < datum.rank(); ++i) emit(w.lam()[i], "L" + datum.label(i));
  for (std::size_t i = 0; i < datum.rank(); ++i) emit(w.rt()[i], "a" + datum.label(i));
  if (first) os << "0";
  return os.str();
}

std::string to_string(const RootVec& b, const CartanDatum& datum) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < datum.rank(); ++i) {
    Int c = b.coeffs()[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Int a = c < 0 ? -c : c;
    if (a != 1) os << a << "*";
    os << "a" << datum.label(i);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace cck
