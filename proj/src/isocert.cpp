#include "cck/isocert.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace cck {

namespace {

// wt plus every eps_i/phi_i agree across the pair.
std::optional<std::string> stat_mismatch(const CellularCrystal& A, const CellularCrystal& B,
                                         const CellVec& a, const CellVec& b) {
  if (!(A.wt(a) == B.wt(b))) return "wt mismatch";
  for (Idx i = 0; i < A.datum().rank(); ++i) {
    if (!(A.eps(i, a) == B.eps(i, b))) return "eps_" + A.datum().label(i) + " mismatch";
    if (!(A.phi(i, a) == B.phi(i, b))) return "phi_" + A.datum().label(i) + " mismatch";
  }
  return std::nullopt;
}

}  // namespace

IsoCertificate grow_isomorphism(const CellularCrystal& A, const CellularCrystal& B,
                                const CellVec& a0, const CellVec& b0, std::size_t step_budget,
                                const std::function<bool(const CellVec&)>& frontier) {
  IsoCertificate cert;
  cert.anchor_source = a0;
  cert.anchor_target = b0;
  if (!(A.datum() == B.datum())) throw ConfigError("crystals live over different data");

  if (auto why = stat_mismatch(A, B, a0, b0)) {
    cert.conflict = IsoConflict{"anchor-mismatch", a0, b0, *why};
    return cert;
  }
  std::map<CellVec, CellVec> fwd{{a0, b0}};
  std::map<CellVec, CellVec> rev{{b0, a0}};
  std::deque<std::pair<CellVec, CellVec>> queue{{a0, b0}};
  cert.explored = 1;

  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    for (Idx i = 0; i < A.datum().rank(); ++i) {
      for (int dir = 0; dir < 2; ++dir) {
        auto a1 = dir == 0 ? A.f_op(i, a) : A.e_op(i, a);
        auto b1 = dir == 0 ? B.f_op(i, b) : B.e_op(i, b);
        if (a1.has_value() != b1.has_value()) {
          cert.conflict = IsoConflict{"null-mismatch", a, b,
                                      std::string(dir == 0 ? "f_" : "e_") + A.datum().label(i) +
                                          " defined on one side only"};
          cert.fragment = std::move(fwd);
          return cert;
        }
        if (!a1) continue;
        if (!frontier(*a1)) continue;
        if (auto why = stat_mismatch(A, B, *a1, *b1)) {
          cert.conflict = IsoConflict{"stat-mismatch", *a1, *b1, *why};
          cert.fragment = std::move(fwd);
          return cert;
        }
        auto it = fwd.find(*a1);
        if (it != fwd.end()) {
          if (!(it->second == *b1)) {
            cert.conflict = IsoConflict{"two-targets", *a1, *b1,
                                        "already mapped to " + to_string(it->second)};
            cert.fragment = std::move(fwd);
            return cert;
          }
          continue;
        }
        auto rit = rev.find(*b1);
        if (rit != rev.end()) {
          cert.conflict = IsoConflict{"two-sources", *a1, *b1,
                                      to_string(rit->second) + " already maps to the target"};
          cert.fragment = std::move(fwd);
          return cert;
        }
        if (cert.explored >= step_budget) throw BudgetExhaustedError(step_budget);
        fwd.emplace(*a1, *b1);
        rev.emplace(*b1, *a1);
        ++cert.explored;
        queue.emplace_back(std::move(*a1), std::move(*b1));
      }
    }
  }
  cert.fragment = std::move(fwd);
  return cert;
}

std::vector<std::pair<Elem, Elem>> fragment_as_elems(const CellularCrystal& A,
                                                     const CellularCrystal& B,
                                                     const IsoCertificate& cert) {
  std::vector<std::pair<Elem, Elem>> out;
  out.reserve(cert.fragment.size());
  for (const auto& [a, b] : cert.fragment) out.emplace_back(A.to_elem(a), B.to_elem(b));
  return out;
}

// ---------------------------------------------------------------- transport

namespace {

struct SearchSide {
  // parent map: node -> (parent, op applied to parent, index)
  std::map<CellVec, std::tuple<CellVec, char, Idx>> parent;
  std::vector<CellVec> layer;
};

std::vector<PathStep> unwind(const SearchSide& side, const CellVec& from_anchor,
                             const CellVec& meet) {
  std::vector<PathStep> steps;
  CellVec cur = meet;
  while (!(cur == from_anchor)) {
    const auto& [par, op, i] = side.parent.at(cur);
    steps.push_back({op, i});
    cur = par;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

// Deterministic bidirectional BFS in the e/f edge graph between zero and x.
// Returns the op sequence carrying zero to x.
std::vector<PathStep> path_from_zero(const CellularCrystal& c, const CellVec& x,
                                     std::size_t node_budget) {
  CellVec zero = c.zero();
  if (x == zero) return {};
  SearchSide from;  // rooted at zero
  SearchSide back;  // rooted at x
  from.parent.emplace(zero, std::tuple<CellVec, char, Idx>{{}, ' ', 0});
  from.layer = {zero};
  back.parent.emplace(x, std::tuple<CellVec, char, Idx>{{}, ' ', 0});
  back.layer = {x};
  std::size_t visited = 2;

  auto expand = [&](SearchSide& side, const SearchSide& other,
                    std::optional<CellVec>& meet) {
    std::vector<CellVec> next;
    for (const CellVec& cur : side.layer) {
      for (Idx i = 0; i < c.datum().rank(); ++i) {
        if (!c.letter_present(i)) continue;
        for (int dir = 0; dir < 2; ++dir) {
          char op = dir == 0 ? 'f' : 'e';
          CellVec nb = dir == 0 ? *c.f_op(i, cur) : *c.e_op(i, cur);
          if (side.parent.count(nb)) continue;
          side.parent.emplace(nb, std::tuple<CellVec, char, Idx>{cur, op, i});
          ++visited;
          if (visited > node_budget) throw PathSearchExhaustedError(node_budget);
          if (!meet && other.parent.count(nb)) {
            meet = nb;
            return;  // first meet in scan order; layers keep runs reproducible
          }
          next.push_back(std::move(nb));
        }
      }
    }
    std::sort(next.begin(), next.end());
    side.layer = std::move(next);
  };

  std::optional<CellVec> meet;
  while (!meet) {
    if (from.layer.empty() && back.layer.empty()) throw PathSearchExhaustedError(node_budget);
    bool forward = !from.layer.empty() &&
                   (back.layer.empty() || from.layer.size() <= back.layer.size());
    expand(forward ? from : back, forward ? back : from, meet);
  }

  std::vector<PathStep> steps = unwind(from, zero, *meet);
  std::vector<PathStep> tail = unwind(back, x, *meet);
  // the back half ran from x toward the meet; invert it to continue to x
  for (std::size_t k = tail.size(); k-- > 0;)
    steps.push_back({tail[k].op == 'f' ? 'e' : 'f', tail[k].i});
  return steps;
}

}  // namespace

CellVec transport(const CellVec& x, const CellularCrystal& from, const CellularCrystal& to,
                  const SearchBudget& budget) {
  if (!(from.datum() == to.datum())) throw ConfigError("crystals live over different data");
  if (!same_weyl_element(from.datum(), from.word().letters(), to.word().letters()))
    throw NotSameElementError();
  if (from.word() == to.word()) return x;
  std::vector<PathStep> steps = path_from_zero(from, x, budget.path_nodes);
  CellVec y = to.zero();
  for (const PathStep& s : steps) {
    auto next = s.op == 'f' ? to.f_op(s.i, y) : to.e_op(s.i, y);
    if (!next) throw TransportConflictError("operator null during replay");
    y = std::move(*next);
  }
  return y;
}

// ------------------------------------------------------------- connectedness

namespace {

// Dense mixed-radix encoding of the padded box.
struct BoxCodec {
  Int radius;       // box is [-radius, radius]^len
  std::size_t len;
  std::uint64_t side() const { return static_cast<std::uint64_t>(2 * radius + 1); }
  std::uint64_t size() const {
    std::uint64_t s = 1;
    for (std::size_t k = 0; k < len; ++k) s *= side();
    return s;
  }
  bool contains(const CellVec& x) const {
    return std::all_of(x.begin(), x.end(),
                       [&](Int v) { return v >= -radius && v <= radius; });
  }
  std::uint64_t encode(const CellVec& x) const {
    std::uint64_t idx = 0;
    for (std::size_t k = 0; k < len; ++k)
      idx = idx * side() + static_cast<std::uint64_t>(x[k] + radius);
    return idx;
  }
};

}  // namespace

ConnectivityReport connectedness_certificate(const CellularCrystal& c, Int r, Int pad) {
  if (r < 0 || pad < 0) throw ConfigError("radius and pad must be >= 0");
  ConnectivityReport rep;
  rep.inner_radius = r;
  rep.pad = pad;

  BoxCodec box{r + pad, c.length()};
  if (box.size() > (std::uint64_t{1} << 33))
    throw ConfigError("padded box too large; shrink radius or pad");
  std::vector<bool> seen(box.size(), false);
  std::deque<CellVec> queue;
  CellVec zero = c.zero();
  seen[box.encode(zero)] = true;
  queue.push_back(zero);
  while (!queue.empty()) {
    CellVec cur = queue.front();
    queue.pop_front();
    for (Idx i = 0; i < c.datum().rank(); ++i) {
      if (!c.letter_present(i)) continue;
      for (int dir = 0; dir < 2; ++dir) {
        CellVec nb = dir == 0 ? *c.f_op(i, cur) : *c.e_op(i, cur);
        if (!box.contains(nb)) continue;
        auto idx = box.encode(nb);
        if (seen[idx]) continue;
        seen[idx] = true;
        queue.push_back(std::move(nb));
      }
    }
  }

  // walk the inner box lexicographically, counting hits
  const std::size_t len = c.length();
  CellVec probe(len, -r);
  bool more = true;
  while (more) {
    ++rep.inner_total;
    if (seen[box.encode(probe)]) {
      ++rep.inner_reached;
    } else if (rep.unreached.size() < 10) {
      rep.unreached.push_back(probe);
    }
    more = false;
    for (std::size_t k = len; k-- > 0;) {
      if (probe[k] < r) {
        ++probe[k];
        more = true;
        break;
      }
      probe[k] = -r;
    }
  }
  return rep;
}

// ------------------------------------------------------------------- hshift

HShiftResult hshift_certificate(const BInftyModel& host, const CellVec& x, Int t_max) {
  HShiftResult res;
  const CartanDatum& datum = host.host().datum();
  Weight rho = Weight::zero(datum.rank());
  for (Idx i = 0; i < datum.rank(); ++i) rho = rho + datum.fundamental_weight(i);
  for (Int t = 0; t <= t_max; ++t) {
    CellVec h = host.host().h_vector(rho.scaled(t));
    CellVec shifted(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) shifted[k] = checked_add(x[k], h[k]);
    Membership m = host.member(shifted);
    if (m.member) {
      res.found = true;
      res.t = t;
      res.shifted = std::move(shifted);
      res.path = std::move(m.path);
      return res;
    }
  }
  return res;
}

}  // namespace cck
