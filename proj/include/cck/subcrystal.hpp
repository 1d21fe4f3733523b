#pragma once

#include <set>
#include <string>
#include <vector>

#include "cck/cellular.hpp"

namespace cck {

struct PathStep {
  char op;  // 'e' or 'f'
  Idx i;
  bool operator==(const PathStep& o) const { return op == o.op && i == o.i; }
};

struct Membership {
  bool member = false;
  std::vector<PathStep> path;  // raising steps applied (certificate on accept)
  std::string reject_reason;   // empty on accept
};

// The highest-weight closure of the zero vector inside a cellular crystal.
// With a longest-element word of a finite-type datum this is the image of
// the strict embedding of B(infinity); for other words the same greedy
// membership is plain f-closure membership, with no further claim.
class BInftyModel {
 public:
  explicit BInftyModel(CellularCrystal host);

  const CellularCrystal& host() const { return host_; }
  bool w0_mode() const { return w0_; }

  Membership member(const CellVec& x) const;           // WrongModeError unless w0
  Membership fclosure_member(const CellVec& x) const;  // greedy raising, any word

 private:
  CellularCrystal host_;
  bool w0_ = false;
};

// Demazure membership by e^max peeling along uw (letters left to right),
// and by star peeling along reversed uw. Both demand closure membership.
bool demazure_member(const BInftyModel& model, const CellVec& x, const Word& uw);
bool demazure_member_star(const BInftyModel& model, const CellVec& x, const Word& uw,
                          const SearchBudget& budget = {});

// Recursive enumeration of B_uw(infinity), truncated at sum(x) <= height_bound.
std::set<CellVec> demazure_enumerate(const CellularCrystal& host, const Word& uw,
                                     Int height_bound);

// Star statistics and operators through reduced-word transport: carry x to a
// word ending in j, read or shift the last coordinate, carry back.
Int eps_star(const CellularCrystal& host, const CellVec& x, Idx j,
             const SearchBudget& budget = {});
CellVec f_star(const CellularCrystal& host, const CellVec& x, Idx j,
               const SearchBudget& budget = {});
CellVec e_star(const CellularCrystal& host, const CellVec& x, Idx j,
               const SearchBudget& budget = {});
// e_star applied eps_star(x) times (no-op unless eps_star(x) > 0).
CellVec e_star_max(const CellularCrystal& host, const CellVec& x, Idx j,
                   const SearchBudget& budget = {});

// B(lambda) inside B(infinity) (x) T_lambda: closure of the highest element
// under the tensor-rule operators killed when phi_i(b (x) t_lambda) <= 0.
struct BLambdaSet {
  Weight lambda;
  std::set<CellVec> elements;
};
BLambdaSet blambda_enumerate(const BInftyModel& model, const Weight& lambda,
                             std::size_t size_cap);
// Induced subcrystal operators on the enumerated set (null outside it).
std::optional<CellVec> blambda_f(const BInftyModel& model, const BLambdaSet& s, Idx i,
                                 const CellVec& x);
std::optional<CellVec> blambda_e(const BInftyModel& model, const BLambdaSet& s, Idx i,
                                 const CellVec& x);

}  // namespace cck
