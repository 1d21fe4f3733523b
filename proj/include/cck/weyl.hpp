#pragma once

#include <set>
#include <string>
#include <vector>

#include "cck/cartan.hpp"

namespace cck {

using Word = std::vector<Idx>;

Word parse_word(const CartanDatum& datum, const std::string& csv);  // "1,2,1"
std::string format_word(const CartanDatum& datum, const Word& w);

bool is_reduced(const CartanDatum& datum, const Word& w);

// The inversion sequence beta_k = s_{i_1}...s_{i_{k-1}} alpha_{i_k}.
// Throws NotReducedError at the first k whose beta is not a positive root.
std::vector<RootVec> beta_sequence(const CartanDatum& datum, const Word& w);

// A validated reduced word with its cached inversion sequence.
class ReducedWord {
 public:
  ReducedWord(const CartanDatum& datum, Word letters);

  const Word& letters() const { return letters_; }
  const std::vector<RootVec>& betas() const { return betas_; }
  std::size_t length() const { return letters_.size(); }
  Idx letter(std::size_t k) const { return letters_[k]; }  // 0-based

  bool operator==(const ReducedWord& o) const { return letters_ == o.letters_; }

 private:
  Word letters_;
  std::vector<RootVec> betas_;
};

// Rank-2 braid order m_ij from a_ij a_ji: 0->2, 1->3, 2->4, 3->6, >=4 -> none.
// Returns 0 when there is no braid relation (infinite order).
Int braid_order(const CartanDatum& datum, Idx i, Idx j);

// Words obtained from w by one rank-2 braid substitution.
std::set<Word> braid_neighbors(const CartanDatum& datum, const Word& w);

// Matsumoto closure (BFS over braid moves). Throws ExplosionGuardError past cap.
std::set<Word> all_reduced_words(const CartanDatum& datum, const Word& w,
                                 std::size_t cap = SearchBudget{}.word_closure_cap);

// First word of the Matsumoto class ending in j, in BFS layer order with
// lexicographic tie-break. Throws NoSuchWordError when w s_j > w.
Word word_ending_in(const CartanDatum& datum, const Word& w, Idx j,
                    std::size_t cap = SearchBudget{}.word_closure_cap);
Word word_starting_in(const CartanDatum& datum, const Word& w, Idx j,
                      std::size_t cap = SearchBudget{}.word_closure_cap);

// (beta, lambda) >= 0 for every beta in the inversion set of w^{-1}.
bool is_w_dominant(const CartanDatum& datum, const Weight& lambda, const Word& w);

// Equal Weyl action on every fundamental weight (a faithful test).
bool same_weyl_element(const CartanDatum& datum, const Word& u, const Word& v);

}  // namespace cck
