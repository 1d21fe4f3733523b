#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cck/subcrystal.hpp"

namespace cck {

struct IsoConflict {
  std::string kind;  // "anchor-mismatch" | "stat-mismatch" | "two-targets" | "two-sources" | ...
  CellVec source;
  CellVec target;
  std::string detail;
};

// Evidence that two connected crystals agree on an explored region: a finite
// fragment preserving wt and every eps/phi and intertwining e/f, or else a
// concrete conflict witness.
struct IsoCertificate {
  CellVec anchor_source, anchor_target;
  std::size_t explored = 0;
  std::map<CellVec, CellVec> fragment;
  std::optional<IsoConflict> conflict;
  bool ok() const { return !conflict.has_value(); }
};

// BFS from the anchor pair following e_i and f_i simultaneously in both
// crystals; stops at the first conflict. The frontier predicate restricts
// exploration on the source side. Throws BudgetExhaustedError.
IsoCertificate grow_isomorphism(const CellularCrystal& A, const CellularCrystal& B,
                                const CellVec& a0, const CellVec& b0, std::size_t step_budget,
                                const std::function<bool(const CellVec&)>& frontier);

// The explored fragment as generic tensor elements (for morphism_check).
std::vector<std::pair<Elem, Elem>> fragment_as_elems(const CellularCrystal& A,
                                                     const CellularCrystal& B,
                                                     const IsoCertificate& cert);

// Carry x between cellular crystals on two reduced words of the same Weyl
// element: find an e/f path from the zero vector to x (bidirectional BFS with
// deterministic neighbor order), replay it on the other side.
CellVec transport(const CellVec& x, const CellularCrystal& from, const CellularCrystal& to,
                  const SearchBudget& budget = {});

struct ConnectivityReport {
  Int inner_radius = 0;
  Int pad = 0;
  std::size_t inner_total = 0;
  std::size_t inner_reached = 0;
  std::vector<CellVec> unreached;  // at most 10 witnesses
  double fraction() const {
    return inner_total == 0 ? 1.0
                            : static_cast<double>(inner_reached) / static_cast<double>(inner_total);
  }
  bool complete() const { return inner_reached == inner_total; }
};

// Reverse BFS from the zero vector using both e and f edges, pruned to the
// box [-r-pad, r+pad]^l; reports the fraction of [-r, r]^l reached.
ConnectivityReport connectedness_certificate(const CellularCrystal& c, Int r, Int pad);

struct HShiftResult {
  bool found = false;
  Int t = 0;             // Lambda = t * sum of fundamental weights
  CellVec shifted;       // x + h_Lambda, a closure member on success
  std::vector<PathStep> path;
};

// Searches Lambda = t*(sum Lambda_i), t = 0..t_max, for a shift putting x
// into the closure. Failure only means t_max was too small.
HShiftResult hshift_certificate(const BInftyModel& host, const CellVec& x, Int t_max);

}  // namespace cck
