#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cck/crystal.hpp"
#include "cck/weyl.hpp"

namespace cck {

// An element of the cellular crystal on a fixed reduced word, identified with
// an integer vector:  (x_1,...,x_l)  <->  f^{x_1}(0)_{i_1} (x) ... (x) f^{x_l}(0)_{i_l}.
using CellVec = std::vector<Int>;

std::string to_string(const CellVec& x);

// Closed-form crystal structure on Z^l for a reduced word (i_1,...,i_l).
// Positions in the public interface are 1-based, matching the sigma formulas.
class CellularCrystal {
 public:
  CellularCrystal(CartanDatum datum, ReducedWord word);

  const CartanDatum& datum() const { return datum_; }
  const ReducedWord& word() const { return word_; }
  std::size_t length() const { return word_.length(); }
  CellVec zero() const { return CellVec(length(), 0); }
  bool letter_present(Idx i) const { return !positions_[i].empty(); }
  const std::vector<std::size_t>& positions_of(Idx i) const { return positions_[i]; }

  // sigma_k(x) = x_k + sum_{j<k} <h_{i_k}, alpha_{i_j}> x_j
  Int sigma(const CellVec& x, std::size_t k) const;
  CrystalValue sigma_tilde(Idx i, const CellVec& x) const;  // -inf when i absent
  std::vector<std::size_t> argmax_positions(Idx i, const CellVec& x) const;
  std::optional<std::size_t> m_f(Idx i, const CellVec& x) const;  // max of the argmax set
  std::optional<std::size_t> m_e(Idx i, const CellVec& x) const;  // min of the argmax set

  // Total mutually inverse bijections for present i; nullopt iff i is absent.
  std::optional<CellVec> f_op(Idx i, const CellVec& x) const;
  std::optional<CellVec> e_op(Idx i, const CellVec& x) const;
  // f^n, with negative n meaning e^{-n}.
  std::optional<CellVec> f_pow(Idx i, Int n, const CellVec& x) const;

  Weight wt(const CellVec& x) const;  // -sum x_k alpha_{i_k}
  CrystalValue eps(Idx i, const CellVec& x) const;
  CrystalValue phi(Idx i, const CellVec& x) const;

  Elem to_elem(const CellVec& x) const;  // (-x_1)_{i_1} (x) ... (x) (-x_l)_{i_l}
  CellVec from_elem(const Elem& b) const;

  // The shift vector f^{m_1}_{i_1} ... f^{m_l}_{i_l} (0) with
  // m_k = <h_{i_k}, s_{i_{k+1}} ... s_{i_l} Lambda>, applied rightmost first.
  CellVec h_vector(const Weight& Lambda) const;     // NotDominantError
  std::vector<Int> h_exponents(const Weight& Lambda) const;

  // Coordinates of a central object: k-th entry is -(beta_k^vee, w lambda).
  CellVec central_cp(const Weight& lam) const;      // NonIntegralCorootError

  bool operator==(const CellularCrystal& o) const {
    return datum_ == o.datum_ && word_ == o.word_;
  }

 private:
  void check_size(const CellVec& x) const;

  CartanDatum datum_;
  ReducedWord word_;
  std::vector<std::vector<Int>> coupling_;            // <h_{i_k}, alpha_{i_j}>, 0-based
  std::vector<std::vector<std::size_t>> positions_;   // 1-based positions carrying each index
};

CrystalOps cellular_ops(const CellularCrystal& c);

// Central-shift equivariance report (both operator directions + the eps law).
struct FCReport {
  bool pass = true;
  std::vector<std::string> failures;
};
FCReport check_fC(const CellularCrystal& c, const Weight& lam, const CellVec& b, Idx i);

// Operator programs: sequences of (op, index, count) with count "max" meaning
// eps_i(x) applications (raising only).
enum class ProgOp { E, F, EStar, FStar };
struct ProgStep {
  ProgOp op;
  Idx i;
  Int count = 1;
  bool max_count = false;
};
using Program = std::vector<ProgStep>;

Program parse_program(const CartanDatum& datum, const std::string& text);

struct TraceEntry {
  std::string op;
  std::string label;
  std::size_t position = 0;  // 1-based m-position acted on (0 for no-op)
  std::string sigma;         // sigma_tilde before the step
};

// Applies a program left to right. Star steps transport through a reduced
// word ending in the star index; defined alongside the star operators.
CellVec apply_program(const CellularCrystal& c, CellVec x, const Program& program,
                      std::vector<TraceEntry>* trace = nullptr,
                      const SearchBudget& budget = {});

}  // namespace cck
