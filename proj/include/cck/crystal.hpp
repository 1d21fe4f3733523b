#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cck/cartan.hpp"

namespace cck {

// Z together with -infinity, kept as a tagged state so that overflow can
// never masquerade as -infinity.
class CrystalValue {
 public:
  CrystalValue(Int v) : finite_(true), v_(v) {}  // NOLINT: implicit by design
  static CrystalValue neg_inf() { return CrystalValue(); }

  bool is_neg_inf() const { return !finite_; }
  bool finite() const { return finite_; }
  Int value() const {
    if (!finite_) throw Error("value() on -infinity");
    return v_;
  }

  CrystalValue operator+(Int n) const {
    return finite_ ? CrystalValue(checked_add(v_, n)) : neg_inf();
  }
  bool operator==(const CrystalValue& o) const {
    return finite_ == o.finite_ && (!finite_ || v_ == o.v_);
  }
  bool operator<(const CrystalValue& o) const {
    if (finite_ != o.finite_) return !finite_;  // -inf below everything
    return finite_ && v_ < o.v_;
  }

  friend CrystalValue max(const CrystalValue& a, const CrystalValue& b) {
    return a < b ? b : a;
  }

  std::string str() const { return finite_ ? std::to_string(v_) : "-inf"; }

 private:
  CrystalValue() : finite_(false), v_(0) {}
  bool finite_;
  Int v_;
};

// Elements of the elementary crystal B_i, the crystal T_lambda, and finite
// tensor products thereof. Tensor nodes may nest, so both bracketings of a
// triple product are representable.
struct BElem {
  Idx i;
  Int n;  // the element (n)_i
  bool operator==(const BElem& o) const { return i == o.i && n == o.n; }
  bool operator<(const BElem& o) const { return i != o.i ? i < o.i : n < o.n; }
};

struct TElem {
  Weight lam;
  bool operator==(const TElem& o) const { return lam == o.lam; }
  bool operator<(const TElem& o) const { return lam < o.lam; }
};

class Elem {
 public:
  static Elem b(Idx i, Int n) { return Elem(BElem{i, n}); }
  static Elem t(Weight lam) { return Elem(TElem{std::move(lam)}); }
  static Elem tensor(std::vector<Elem> parts);

  bool is_b() const { return node_.index() == 0; }
  bool is_t() const { return node_.index() == 1; }
  bool is_tensor() const { return node_.index() == 2; }
  const BElem& as_b() const { return std::get<0>(node_); }
  const TElem& as_t() const { return std::get<1>(node_); }
  const std::vector<Elem>& parts() const { return std::get<2>(node_); }

  // Leaves in left-to-right order, nesting erased.
  std::vector<Elem> flatten() const;

  bool operator==(const Elem& o) const { return node_ == o.node_; }
  bool operator<(const Elem& o) const { return node_ < o.node_; }

 private:
  explicit Elem(BElem v) : node_(std::move(v)) {}
  explicit Elem(TElem v) : node_(std::move(v)) {}
  explicit Elem(std::vector<Elem> v) : node_(std::move(v)) {}
  std::variant<BElem, TElem, std::vector<Elem>> node_;
};

using ElemOpt = std::optional<Elem>;  // nullopt is the "0" outside the crystal

Weight elem_wt(const CartanDatum& datum, const Elem& b);
CrystalValue elem_eps(const CartanDatum& datum, Idx i, const Elem& b);
CrystalValue elem_phi(const CartanDatum& datum, Idx i, const Elem& b);
ElemOpt elem_e(const CartanDatum& datum, Idx i, const Elem& b);
ElemOpt elem_f(const CartanDatum& datum, Idx i, const Elem& b);

std::string to_string(const Elem& b, const CartanDatum& datum);

// A crystal presented through its structure maps; lets the checkers run
// against the generic tensor rule, closed-form cellular operators, or any
// induced substructure alike.
struct CrystalOps {
  std::size_t rank = 0;
  std::function<Weight(const Elem&)> wt;
  std::function<CrystalValue(Idx, const Elem&)> eps;
  std::function<CrystalValue(Idx, const Elem&)> phi;
  std::function<ElemOpt(Idx, const Elem&)> e;
  std::function<ElemOpt(Idx, const Elem&)> f;
  std::function<Int(Idx, const Weight&)> pairing;  // <h_i, .>
  std::function<Weight(Idx)> alpha;                // alpha_i as a Weight
};

CrystalOps generic_ops(const CartanDatum& datum);

struct CheckReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Kashiwara's axioms over a finite window: only conditions whose operands
// lie in `elements` are tested, so windows of infinite crystals are fine.
CheckReport axiom_check(const CrystalOps& crystal, const std::vector<Elem>& elements);

// Morphism conditions on a finite map fragment; with `strict` also checks
// e/f commutation including nulls (wherever images are inside the fragment).
CheckReport morphism_check(const CrystalOps& source, const CrystalOps& target,
                           const std::vector<std::pair<Elem, Elem>>& map, bool strict);

}  // namespace cck
