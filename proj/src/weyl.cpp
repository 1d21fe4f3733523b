#include "cck/weyl.hpp"

#include <algorithm>
#include <sstream>

namespace cck {

Word parse_word(const CartanDatum& datum, const std::string& csv) {
  Word out;
  std::string token;
  std::istringstream is(csv);
  while (std::getline(is, token, ',')) {
    // trim spaces
    auto b = token.find_first_not_of(" \t");
    auto e = token.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(datum.index_of(token.substr(b, e - b + 1)));
  }
  return out;
}

std::string format_word(const CartanDatum& datum, const Word& w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << ",";
    os << datum.label(w[k]);
  }
  return os.str();
}

std::vector<RootVec> beta_sequence(const CartanDatum& datum, const Word& w) {
  std::vector<RootVec> betas;
  betas.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    RootVec b = RootVec::simple(datum.rank(), w[k]);
    for (std::size_t j = k; j-- > 0;) b = datum.reflect_root(w[j], b);
    if (!b.positive()) throw NotReducedError(k + 1);
    betas.push_back(std::move(b));
  }
  return betas;
}

bool is_reduced(const CartanDatum& datum, const Word& w) {
  try {
    beta_sequence(datum, w);
    return true;
  } catch (const NotReducedError&) {
    return false;
  }
}

ReducedWord::ReducedWord(const CartanDatum& datum, Word letters) : letters_(std::move(letters)) {
  betas_ = beta_sequence(datum, letters_);
  std::set<RootVec> distinct(betas_.begin(), betas_.end());
  if (distinct.size() != betas_.size())
    throw NotReducedError(letters_.size());  // cannot happen for genuine reduced words
}

Int braid_order(const CartanDatum& datum, Idx i, Idx j) {
  Int p = checked_mul(datum.a(i, j), datum.a(j, i));
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

std::set<Word> braid_neighbors(const CartanDatum& datum, const Word& w) {
  std::set<Word> out;
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    Idx i = w[p], j = w[p + 1];
    if (i == j) continue;
    Int m = braid_order(datum, i, j);
    if (m == 0 || p + static_cast<std::size_t>(m) > w.size()) continue;
    bool alternating = true;
    for (std::size_t t = 0; t < static_cast<std::size_t>(m); ++t)
      if (w[p + t] != (t % 2 == 0 ? i : j)) {
        alternating = false;
        break;
      }
    if (!alternating) continue;
    Word v = w;
    for (std::size_t t = 0; t < static_cast<std::size_t>(m); ++t)
      v[p + t] = (t % 2 == 0 ? j : i);
    if (v != w) out.insert(std::move(v));
  }
  return out;
}

namespace {

// Layered BFS over braid moves; layers are visited in lexicographic order so
// every traversal is reproducible. Calls visit(word) on each new word; stop
// when visit returns true.
template <typename Visit>
bool braid_bfs(const CartanDatum& datum, const Word& start, std::size_t cap, Visit visit,
               std::set<Word>* out_all) {
  std::set<Word> seen{start};
  std::set<Word> layer{start};
  while (!layer.empty()) {
    for (const Word& w : layer)
      if (visit(w)) return true;
    std::set<Word> next;
    for (const Word& w : layer)
      for (Word v : braid_neighbors(datum, w))
        if (!seen.count(v)) {
          seen.insert(v);
          if (seen.size() > cap) throw ExplosionGuardError(cap);
          next.insert(std::move(v));
        }
    layer.swap(next);
  }
  if (out_all) *out_all = std::move(seen);
  return false;
}

}  // namespace

std::set<Word> all_reduced_words(const CartanDatum& datum, const Word& w, std::size_t cap) {
  if (!is_reduced(datum, w)) throw NotReducedError(0);
  std::set<Word> all;
  braid_bfs(datum, w, cap, [](const Word&) { return false; }, &all);
  return all;
}

Word word_ending_in(const CartanDatum& datum, const Word& w, Idx j, std::size_t cap) {
  if (!is_reduced(datum, w)) throw NotReducedError(0);
  if (w.empty()) throw NoSuchWordError(datum.label(j));
  Word hit;
  bool found = braid_bfs(
      datum, w, cap,
      [&](const Word& v) {
        if (v.back() == j) {
          hit = v;
          return true;
        }
        return false;
      },
      nullptr);
  if (!found) throw NoSuchWordError(datum.label(j));
  return hit;
}

Word word_starting_in(const CartanDatum& datum, const Word& w, Idx j, std::size_t cap) {
  Word rev(w.rbegin(), w.rend());
  Word hit = word_ending_in(datum, rev, j, cap);
  return Word(hit.rbegin(), hit.rend());
}

bool is_w_dominant(const CartanDatum& datum, const Weight& lambda, const Word& w) {
  Word rev(w.rbegin(), w.rend());  // inversion set of w^{-1}
  for (const RootVec& beta : beta_sequence(datum, rev))
    if (datum.form(beta, lambda) < 0) return false;
  return true;
}

bool same_weyl_element(const CartanDatum& datum, const Word& u, const Word& v) {
  for (std::size_t i = 0; i < datum.rank(); ++i) {
    Weight fw = datum.fundamental_weight(i);
    if (!(datum.act(u, fw) == datum.act(v, fw))) return false;
  }
  return true;
}

}  // namespace cck
