#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cck/basics.hpp"

#include <nlohmann/json_fwd.hpp>

namespace cck {

class CartanDatum;

// A formal integral weight  sum_i lam_i Lambda_i + sum_j rt_j alpha_j.
// Equality is componentwise on the (lam, rt) pair; every in-scope algorithm
// consumes weights only through pairings and forms, which are linear in both
// parts, so distinct formal representatives never arise.
class Weight {
 public:
  Weight(std::vector<Int> lam, std::vector<Int> rt);
  static Weight zero(std::size_t rank);

  const std::vector<Int>& lam() const { return lam_; }
  const std::vector<Int>& rt() const { return rt_; }
  std::size_t rank() const { return lam_.size(); }

  bool is_zero() const;
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight scaled(Int c) const;
  bool operator==(const Weight& o) const { return lam_ == o.lam_ && rt_ == o.rt_; }
  bool operator<(const Weight& o) const;

 private:
  std::vector<Int> lam_, rt_;
};

// Integer vector over the simple roots.
class RootVec {
 public:
  explicit RootVec(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {}
  static RootVec zero(std::size_t rank) { return RootVec(std::vector<Int>(rank, 0)); }
  static RootVec simple(std::size_t rank, Idx i);

  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int height() const;           // sum of |coeffs|
  bool positive() const;        // all coeffs >= 0 and not all zero
  RootVec operator+(const RootVec& o) const;
  bool operator==(const RootVec& o) const { return coeffs_ == o.coeffs_; }
  bool operator<(const RootVec& o) const { return coeffs_ < o.coeffs_; }

 private:
  std::vector<Int> coeffs_;
};

// Generalized Cartan matrix with labels and canonical minimal symmetrizers.
// All pairings and bilinear forms of the library bottom out here:
//   <h_i, alpha_j> = a(i,j),  (alpha_i, alpha_j) = d_i a(i,j).
class CartanDatum {
 public:
  CartanDatum(std::vector<std::string> labels, std::vector<std::vector<Int>> matrix,
              std::optional<std::vector<Int>> symmetrizers = std::nullopt);

  static CartanDatum from_json(const nlohmann::json& j);
  static CartanDatum builtin(std::string_view name);  // A3, B2, ..., G2, A1^(1)
  nlohmann::json to_json() const;

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Idx i) const { return labels_[i]; }
  Idx index_of(std::string_view label) const;  // throws ConfigError
  Int a(Idx i, Idx j) const { return matrix_[i][j]; }
  Int d(Idx i) const { return sym_[i]; }
  const std::vector<Int>& symmetrizers() const { return sym_; }
  bool finite_type() const { return finite_type_; }

  bool operator==(const CartanDatum& o) const {
    return labels_ == o.labels_ && matrix_ == o.matrix_ && sym_ == o.sym_;
  }

  Weight fundamental_weight(Idx i) const;
  Weight simple_root(Idx i) const;  // alpha_i as a Weight (pure rt part)

  // <h_i, lambda> = lam_i + sum_j a(i,j) rt_j
  Int pairing(Idx i, const Weight& w) const;
  // (beta, lambda) = sum_i beta_i d_i <h_i, lambda>
  Int form(const RootVec& beta, const Weight& w) const;
  Int form_rr(const RootVec& beta, const RootVec& gamma) const;

  Weight reflect(Idx i, const Weight& w) const;  // s_i
  // Composition s_{i_1} ... s_{i_k} applied to lambda, rightmost factor first.
  Weight act(std::span<const Idx> word, const Weight& w) const;
  RootVec reflect_root(Idx i, const RootVec& b) const;
  RootVec act_root(std::span<const Idx> word, const RootVec& b) const;

  bool dominant(const Weight& w) const;  // all <h_i, w> >= 0

  // Finite type only; BFS closure of the simple roots under reflections.
  std::vector<RootVec> positive_roots() const;

 private:
  void validate() const;
  void canonicalize_symmetrizers(const std::optional<std::vector<Int>>& given);
  bool compute_finite_type() const;

  std::vector<std::string> labels_;
  std::vector<std::vector<Int>> matrix_;
  std::vector<Int> sym_;
  bool finite_type_ = false;
};

std::string to_string(const Weight& w, const CartanDatum& datum);
std::string to_string(const RootVec& b, const CartanDatum& datum);

}  // namespace cck
