#include "cck/subcrystal.hpp"

#include <algorithm>
#include <numeric>

#include "cck/isocert.hpp"

namespace cck {

BInftyModel::BInftyModel(CellularCrystal host) : host_(std::move(host)) {
  if (host_.datum().finite_type())
    w0_ = host_.length() == host_.datum().positive_roots().size();
}

Membership BInftyModel::fclosure_member(const CellVec& x) const {
  Membership res;
  const std::size_t n = host_.datum().rank();
  CellVec cur = x;
  while (true) {
    if (std::all_of(cur.begin(), cur.end(), [](Int v) { return v == 0; })) {
      res.member = true;
      return res;
    }
    Int total = 0;
    for (Int v : cur) total = checked_add(total, v);
    if (total < 0) {
      res.reject_reason = "coordinate sum went negative at " + to_string(cur);
      return res;
    }
    Weight w = host_.wt(cur);
    for (std::size_t j = 0; j < n; ++j)
      if (w.rt()[j] > 0) {
        res.reject_reason = "weight left -Q+ at " + to_string(cur);
        return res;
      }
    // raise with the smallest index whose eps is positive
    bool raised = false;
    for (Idx i = 0; i < n && !raised; ++i) {
      CrystalValue e = host_.eps(i, cur);
      if (e.finite() && e.value() > 0) {
        cur = *host_.e_op(i, cur);
        res.path.push_back({'e', i});
        raised = true;
      }
    }
    if (!raised) {
      res.reject_reason = "stuck at nonzero " + to_string(cur) + " with no positive eps";
      return res;
    }
  }
}

Membership BInftyModel::member(const CellVec& x) const {
  if (!w0_) throw WrongModeError();
  return fclosure_member(x);
}

namespace {

// e_i applied eps_i(x) times when eps_i(x) > 0, else a no-op.
CellVec e_max(const CellularCrystal& host, Idx i, CellVec x) {
  CrystalValue e = host.eps(i, x);
  if (!e.finite() || e.value() <= 0) return x;
  for (Int t = 0; t < e.value(); ++t) x = *host.e_op(i, x);
  return x;
}

bool is_zero_vec(const CellVec& x) {
  return std::all_of(x.begin(), x.end(), [](Int v) { return v == 0; });
}

}  // namespace

bool demazure_member(const BInftyModel& model, const CellVec& x, const Word& uw) {
  if (!is_reduced(model.host().datum(), uw)) throw NotReducedError(0);
  if (!model.fclosure_member(x).member) throw NotInBInftyError();
  CellVec cur = x;
  for (Idx j : uw) cur = e_max(model.host(), j, cur);
  return is_zero_vec(cur);
}

bool demazure_member_star(const BInftyModel& model, const CellVec& x, const Word& uw,
                          const SearchBudget& budget) {
  if (!is_reduced(model.host().datum(), uw)) throw NotReducedError(0);
  if (!model.fclosure_member(x).member) throw NotInBInftyError();
  CellVec cur = x;
  for (std::size_t k = uw.size(); k-- > 0;) cur = e_star_max(model.host(), cur, uw[k], budget);
  return is_zero_vec(cur);
}

std::set<CellVec> demazure_enumerate(const CellularCrystal& host, const Word& uw,
                                     Int height_bound) {
  if (height_bound < 0) throw ConfigError("height bound must be >= 0");
  if (!is_reduced(host.datum(), uw)) throw NotReducedError(0);
  std::set<CellVec> out{host.zero()};
  // peel the first letter: B_w = union of f_{i_1}-strings over B_{w'}
  for (std::size_t k = uw.size(); k-- > 0;) {
    Idx i = uw[k];
    std::set<CellVec> closed = out;
    for (const CellVec& y : out) {
      Int h = std::accumulate(y.begin(), y.end(), Int{0}, checked_add);
      CellVec cur = y;
      while (h < height_bound) {
        cur = *host.f_op(i, cur);
        h = checked_add(h, 1);
        closed.insert(cur);
      }
    }
    out.swap(closed);
  }
  return out;
}

// ------------------------------------------------------------- star operators

namespace {

CellularCrystal star_partner(const CellularCrystal& host, Idx j, const SearchBudget& budget) {
  if (j >= host.datum().rank()) throw ConfigError("index out of range");
  Word target;
  try {
    target = word_ending_in(host.datum(), host.word().letters(), j, budget.word_closure_cap);
  } catch (const NoSuchWordError&) {
    throw StarNotAvailableError(host.datum().label(j));
  }
  return CellularCrystal(host.datum(), ReducedWord(host.datum(), target));
}

}  // namespace

Int eps_star(const CellularCrystal& host, const CellVec& x, Idx j, const SearchBudget& budget) {
  CellularCrystal partner = star_partner(host, j, budget);
  CellVec y = transport(x, host, partner, budget);
  return y.back();
}

CellVec f_star(const CellularCrystal& host, const CellVec& x, Idx j, const SearchBudget& budget) {
  CellularCrystal partner = star_partner(host, j, budget);
  CellVec y = transport(x, host, partner, budget);
  y.back() = checked_add(y.back(), 1);
  return transport(y, partner, host, budget);
}

CellVec e_star(const CellularCrystal& host, const CellVec& x, Idx j, const SearchBudget& budget) {
  CellularCrystal partner = star_partner(host, j, budget);
  CellVec y = transport(x, host, partner, budget);
  y.back() = checked_sub(y.back(), 1);
  return transport(y, partner, host, budget);
}

CellVec e_star_max(const CellularCrystal& host, const CellVec& x, Idx j,
                   const SearchBudget& budget) {
  CellularCrystal partner = star_partner(host, j, budget);
  CellVec y = transport(x, host, partner, budget);
  if (y.back() <= 0) return x;
  y.back() = 0;  // (e*_j)^{eps*_j(x)}
  return transport(y, partner, host, budget);
}

// ---------------------------------------------------------------- B(lambda)

BLambdaSet blambda_enumerate(const BInftyModel& model, const Weight& lambda,
                             std::size_t size_cap) {
  const CellularCrystal& host = model.host();
  if (!model.w0_mode()) throw WrongModeError();
  if (!host.datum().dominant(lambda)) throw NotDominantError();
  BLambdaSet out{lambda, {}};
  std::vector<CellVec> queue{host.zero()};
  out.elements.insert(host.zero());
  while (!queue.empty()) {
    CellVec b = queue.back();
    queue.pop_back();
    for (Idx i = 0; i < host.datum().rank(); ++i) {
      // survival rule: f_i dies when phi_i(b (x) t_lambda) <= 0
      CrystalValue phi = host.phi(i, b);
      if (!phi.finite()) continue;
      if (checked_add(phi.value(), host.datum().pairing(i, lambda)) <= 0) continue;
      CellVec y = *host.f_op(i, b);
      if (out.elements.insert(y).second) {
        if (out.elements.size() > size_cap) throw CapExceededError(size_cap);
        queue.push_back(std::move(y));
      }
    }
  }
  return out;
}

std::optional<CellVec> blambda_f(const BInftyModel& model, const BLambdaSet& s, Idx i,
                                 const CellVec& x) {
  auto y = model.host().f_op(i, x);
  if (!y || !s.elements.count(*y)) return std::nullopt;
  return y;
}

std::optional<CellVec> blambda_e(const BInftyModel& model, const BLambdaSet& s, Idx i,
                                 const CellVec& x) {
  auto y = model.host().e_op(i, x);
  if (!y || !s.elements.count(*y)) return std::nullopt;
  return y;
}

// ------------------------------------------------------------------ programs

CellVec apply_program(const CellularCrystal& c, CellVec x, const Program& program,
                      std::vector<TraceEntry>* trace, const SearchBudget& budget) {
  auto record = [&](const std::string& op, Idx i, std::size_t pos, const std::string& sig) {
    if (trace) trace->push_back({op, c.datum().label(i), pos, sig});
  };
  for (const ProgStep& step : program) {
    switch (step.op) {
      case ProgOp::F:
      case ProgOp::E: {
        bool lowering = step.op == ProgOp::F;
        Int count = step.count;
        if (step.max_count) {
          CrystalValue e = c.eps(step.i, x);
          count = (e.finite() && e.value() > 0) ? e.value() : 0;
        }
        for (Int t = 0; t < count; ++t) {
          auto pos = lowering ? c.m_f(step.i, x) : c.m_e(step.i, x);
          if (!pos) throw ConfigError("operator is null: index " + c.datum().label(step.i) +
                                      " does not occur in the word");
          record(lowering ? "f" : "e", step.i, *pos, c.sigma_tilde(step.i, x).str());
          x = lowering ? *c.f_op(step.i, x) : *c.e_op(step.i, x);
        }
        break;
      }
      case ProgOp::FStar:
      case ProgOp::EStar: {
        for (Int t = 0; t < step.count; ++t) {
          Int es = eps_star(c, x, step.i, budget);
          record(step.op == ProgOp::FStar ? "fs" : "es", step.i, 0, std::to_string(es));
          x = step.op == ProgOp::FStar ? f_star(c, x, step.i, budget)
                                       : e_star(c, x, step.i, budget);
        }
        break;
      }
    }
  }
  return x;
}

}  // namespace cck
