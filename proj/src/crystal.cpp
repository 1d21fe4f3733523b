#include "cck/crystal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cck {

Elem Elem::tensor(std::vector<Elem> parts) {
  if (parts.empty()) throw Error("empty tensor");
  if (parts.size() == 1) return parts.front();
  return Elem(std::move(parts));
}

std::vector<Elem> Elem::flatten() const {
  if (!is_tensor()) return {*this};
  std::vector<Elem> out;
  for (const Elem& p : parts()) {
    auto sub = p.flatten();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

// ----------------------------------------------------------- structure maps

Weight elem_wt(const CartanDatum& datum, const Elem& b) {
  if (b.is_b()) {
    Weight a = datum.simple_root(b.as_b().i);
    return a.scaled(b.as_b().n);
  }
  if (b.is_t()) return b.as_t().lam;
  Weight w = Weight::zero(datum.rank());
  for (const Elem& p : b.parts()) w = w + elem_wt(datum, p);
  return w;
}

namespace {

// eps over a suffix b_k ⊗ ... ⊗ b_m, folded through the binary rule
// eps(b1 ⊗ B2) = max(eps(b1), eps(B2) - <h_i, wt(b1)>).
CrystalValue span_eps(const CartanDatum& datum, Idx i, const std::vector<Elem>& parts,
                      std::size_t from) {
  CrystalValue acc = CrystalValue::neg_inf();
  Int drop = 0;  // <h_i, wt(b_from ... b_{k-1})>
  for (std::size_t k = from; k < parts.size(); ++k) {
    CrystalValue term = elem_eps(datum, i, parts[k]);
    if (term.finite()) acc = max(acc, term + (-drop));
    drop = checked_add(drop, datum.pairing(i, elem_wt(datum, parts[k])));
  }
  return acc;
}

CrystalValue span_phi(const CartanDatum& datum, Idx i, const std::vector<Elem>& parts,
                      std::size_t upto) {
  // phi(b1 ⊗ b2) = max(phi(b2), phi(b1) + <h_i, wt(b2)>), folded from the left.
  CrystalValue acc = CrystalValue::neg_inf();
  Int lift = 0;  // <h_i, wt(b_{k+1} ... b_upto)> accumulated backwards
  for (std::size_t k = upto + 1; k-- > 0;) {
    CrystalValue term = elem_phi(datum, i, parts[k]);
    if (term.finite()) acc = max(acc, term + lift);
    lift = checked_add(lift, datum.pairing(i, elem_wt(datum, parts[k])));
  }
  return acc;
}

enum class OpKind { E, F };

// Signature rule on a tensor node: recursively decide between the head
// factor and the rest, exactly as in the binary tensor formulas.
ElemOpt tensor_apply(const CartanDatum& datum, Idx i, const Elem& b, OpKind op) {
  const std::vector<Elem>& parts = b.parts();
  std::size_t pos = 0;
  for (; pos + 1 < parts.size(); ++pos) {
    CrystalValue phi1 = elem_phi(datum, i, parts[pos]);
    CrystalValue eps2 = span_eps(datum, i, parts, pos + 1);
    bool act_head = (op == OpKind::F) ? (eps2 < phi1) : !(phi1 < eps2);
    if (act_head) break;
  }
  ElemOpt sub = (op == OpKind::F) ? elem_f(datum, i, parts[pos]) : elem_e(datum, i, parts[pos]);
  if (!sub) return std::nullopt;
  std::vector<Elem> out = parts;
  out[pos] = std::move(*sub);
  return Elem::tensor(std::move(out));
}

}  // namespace

CrystalValue elem_eps(const CartanDatum& datum, Idx i, const Elem& b) {
  if (b.is_b()) {
    const BElem& eb = b.as_b();
    return eb.i == i ? CrystalValue(checked_neg(eb.n)) : CrystalValue::neg_inf();
  }
  if (b.is_t()) return CrystalValue::neg_inf();
  return span_eps(datum, i, b.parts(), 0);
}

CrystalValue elem_phi(const CartanDatum& datum, Idx i, const Elem& b) {
  if (b.is_b()) {
    const BElem& eb = b.as_b();
    return eb.i == i ? CrystalValue(eb.n) : CrystalValue::neg_inf();
  }
  if (b.is_t()) return CrystalValue::neg_inf();
  return span_phi(datum, i, b.parts(), b.parts().size() - 1);
}

ElemOpt elem_e(const CartanDatum& datum, Idx i, const Elem& b) {
  if (b.is_b()) {
    const BElem& eb = b.as_b();
    if (eb.i != i) return std::nullopt;
    return Elem::b(i, checked_add(eb.n, 1));
  }
  if (b.is_t()) return std::nullopt;
  return tensor_apply(datum, i, b, OpKind::E);
}

ElemOpt elem_f(const CartanDatum& datum, Idx i, const Elem& b) {
  if (b.is_b()) {
    const BElem& eb = b.as_b();
    if (eb.i != i) return std::nullopt;
    return Elem::b(i, checked_sub(eb.n, 1));
  }
  if (b.is_t()) return std::nullopt;
  return tensor_apply(datum, i, b, OpKind::F);
}

std::string to_string(const Elem& b, const CartanDatum& datum) {
  std::ostringstream os;
  if (b.is_b()) {
    os << "(" << b.as_b().n << ")_" << datum.label(b.as_b().i);
  } else if (b.is_t()) {
    os << "t[" << to_string(b.as_t().lam, datum) << "]";
  } else {
    for (std::size_t k = 0; k < b.parts().size(); ++k) {
      if (k) os << " (x) ";
      os << to_string(b.parts()[k], datum);
    }
  }
  return os.str();
}

CrystalOps generic_ops(const CartanDatum& datum) {
  auto d = std::make_shared<CartanDatum>(datum);
  CrystalOps ops;
  ops.rank = d->rank();
  ops.wt = [d](const Elem& b) { return elem_wt(*d, b); };
  ops.eps = [d](Idx i, const Elem& b) { return elem_eps(*d, i, b); };
  ops.phi = [d](Idx i, const Elem& b) { return elem_phi(*d, i, b); };
  ops.e = [d](Idx i, const Elem& b) { return elem_e(*d, i, b); };
  ops.f = [d](Idx i, const Elem& b) { return elem_f(*d, i, b); };
  ops.pairing = [d](Idx i, const Weight& w) { return d->pairing(i, w); };
  ops.alpha = [d](Idx i) { return d->simple_root(i); };
  return ops;
}

// ----------------------------------------------------------------- checkers

namespace {

std::string describe(const Elem& b) {
  std::ostringstream os;
  if (b.is_b()) os << "(" << b.as_b().n << ")_" << b.as_b().i;
  else if (b.is_t()) os << "t";
  else {
    os << "[";
    for (std::size_t k = 0; k < b.parts().size(); ++k) {
      if (k) os << ",";
      os << describe(b.parts()[k]);
    }
    os << "]";
  }
  return os.str();
}

}  // namespace

CheckReport axiom_check(const CrystalOps& c, const std::vector<Elem>& elements) {
  CheckReport rep;
  std::set<Elem> in_set(elements.begin(), elements.end());
  auto note = [&](const Elem& b, Idx i, const std::string& cond, const std::string& why) {
    rep.violations.push_back("(" + describe(b) + ", i=" + std::to_string(i) + ", " + cond + "): " +
                             why);
  };
  for (const Elem& b : elements) {
    Weight w = c.wt(b);
    for (Idx i = 0; i < c.rank; ++i) {
      CrystalValue eps = c.eps(i, b), phi = c.phi(i, b);
      // (1) phi = eps + <h_i, wt>
      if (eps.finite() != phi.finite()) {
        note(b, i, "C1", "exactly one of eps/phi is -inf");
      } else if (eps.finite() && phi.value() != checked_add(eps.value(), c.pairing(i, w))) {
        note(b, i, "C1", "phi != eps + <h_i, wt>");
      }
      // (5) phi = -inf  =>  e b = f b = 0
      if (phi.is_neg_inf() && (c.e(i, b) || c.f(i, b)))
        note(b, i, "C5", "operators defined despite phi = -inf");
      // (2) raising shifts and (4) mutual inverse
      if (ElemOpt eb = c.e(i, b); eb && in_set.count(*eb)) {
        if (!(c.wt(*eb) == w + c.alpha(i))) note(b, i, "C2", "wt(e b) != wt(b) + alpha_i");
        if (!(c.eps(i, *eb) == eps + (-1))) note(b, i, "C2", "eps(e b) != eps(b) - 1");
        if (!(c.phi(i, *eb) == phi + 1)) note(b, i, "C2", "phi(e b) != phi(b) + 1");
        ElemOpt back = c.f(i, *eb);
        if (!back || !(*back == b)) note(b, i, "C4", "f(e b) != b");
      }
      // (3) lowering shifts and (4)
      if (ElemOpt fb = c.f(i, b); fb && in_set.count(*fb)) {
        if (!(c.wt(*fb) == w - c.alpha(i))) note(b, i, "C3", "wt(f b) != wt(b) - alpha_i");
        if (!(c.eps(i, *fb) == eps + 1)) note(b, i, "C3", "eps(f b) != eps(b) + 1");
        if (!(c.phi(i, *fb) == phi + (-1))) note(b, i, "C3", "phi(f b) != phi(b) - 1");
        ElemOpt back = c.e(i, *fb);
        if (!back || !(*back == b)) note(b, i, "C4", "e(f b) != b");
      }
    }
  }
  return rep;
}

CheckReport morphism_check(const CrystalOps& source, const CrystalOps& target,
                           const std::vector<std::pair<Elem, Elem>>& map, bool strict) {
  CheckReport rep;
  std::map<Elem, Elem> psi(map.begin(), map.end());
  auto note = [&](const Elem& b, const std::string& why) {
    rep.violations.push_back(describe(b) + ": " + why);
  };
  for (const auto& [a, img] : map) {
    if (!(source.wt(a) == target.wt(img))) note(a, "wt not preserved");
    for (Idx i = 0; i < source.rank; ++i) {
      if (!(source.eps(i, a) == target.eps(i, img)))
        note(a, "eps_" + std::to_string(i) + " not preserved");
      if (!(source.phi(i, a) == target.phi(i, img)))
        note(a, "phi_" + std::to_string(i) + " not preserved");
      ElemOpt fa = source.f(i, a);
      if (fa) {
        // Intertwining is testable only where psi is defined on the image.
        auto it = psi.find(*fa);
        if (it != psi.end()) {
          ElemOpt fi = target.f(i, img);
          if (!fi || !(*fi == it->second))
            note(a, "f_" + std::to_string(i) + " does not intertwine");
        }
      } else if (strict) {
        if (target.f(i, img)) note(a, "strict: f_" + std::to_string(i) + " null only on source");
      }
      if (strict) {
        ElemOpt ea = source.e(i, a);
        if (ea) {
          auto it = psi.find(*ea);
          if (it != psi.end()) {
            ElemOpt ei = target.e(i, img);
            if (!ei || !(*ei == it->second))
              note(a, "e_" + std::to_string(i) + " does not intertwine");
          }
        } else if (target.e(i, img)) {
          note(a, "strict: e_" + std::to_string(i) + " null only on source");
        }
      }
    }
  }
  return rep;
}

}  // namespace cck
