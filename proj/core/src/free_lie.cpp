#include "disposition/free_lie.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "disposition/errors.hpp"

namespace disposition {
namespace {

using Sparse = std::map<HallIndex, std::int64_t>;

void accumulate(Sparse& into, const Sparse& from, std::int64_t scale) {
  for (const auto& [k, v] : from) {
    auto& slot = into[k];
    slot += scale * v;
    if (slot == 0) into.erase(k);
  }
}

IntCombination to_combination(const Sparse& sparse) {
  return IntCombination(sparse.begin(), sparse.end());
}

// Duval's algorithm: Lyndon words of length <= max_len over `letters`, in lex order.
std::vector<Word> lyndon_words(unsigned letters, unsigned max_len) {
  std::vector<Word> out;
  if (letters == 0 || max_len == 0) return out;
  Word w{0};
  while (!w.empty()) {
    out.push_back(w);
    const std::size_t m = w.size();
    while (w.size() < max_len) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == letters - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

bool is_lyndon(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<long>(i),
                                      w.end())) {
      return false;
    }
  }
  return !w.empty();
}

}  // namespace

WordIndexer::WordIndexer(unsigned d, unsigned c) : d_(d), c_(c) {
  offsets_.assign(c + 2, 0);
  powers_.assign(c + 1, 1);
  for (unsigned len = 1; len <= c; ++len) powers_[len] = powers_[len - 1] * d;
  for (unsigned len = 0; len <= c; ++len) offsets_[len + 1] = offsets_[len] + powers_[len];
}

std::size_t WordIndexer::index(const Word& word) const {
  std::size_t value = 0;
  for (std::uint8_t letter : word) value = value * d_ + letter;
  return offsets_[word.size()] + value;
}

unsigned WordIndexer::length(std::size_t index) const {
  unsigned len = 0;
  while (offsets_[len + 1] <= index) ++len;
  return len;
}

Word WordIndexer::word(std::size_t index) const {
  const unsigned len = length(index);
  std::size_t value = index - offsets_[len];
  Word out(len);
  for (unsigned pos = len; pos-- > 0;) {
    out[pos] = static_cast<std::uint8_t>(value % d_);
    value /= d_;
  }
  return out;
}

std::size_t WordIndexer::concat(std::size_t a, std::size_t b) const {
  const unsigned la = length(a);
  const unsigned lb = length(b);
  const std::size_t va = a - offsets_[la];
  const std::size_t vb = b - offsets_[lb];
  return offsets_[la + lb] + va * powers_[lb] + vb;
}

std::shared_ptr<const FreeLieAlgebra> FreeLieAlgebra::get(unsigned d, unsigned c) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const FreeLieAlgebra>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{d, c}];
  if (!slot) slot = std::make_shared<const FreeLieAlgebra>(d, c);
  return slot;
}

FreeLieAlgebra::FreeLieAlgebra(unsigned d, unsigned c) : d_(d), c_(c), words_(d, c) {
  if (d < 1 || c < 1) throw DomainError("free Lie algebra needs d >= 1 and c >= 1");
  if (d > 255) throw DomainError("free Lie algebra rank limited to 255 letters");
  build_basis();
  build_structure_constants();
  build_expansions();
}

void FreeLieAlgebra::build_basis() {
  std::vector<Word> words = lyndon_words(d_, c_);
  std::stable_sort(words.begin(), words.end(),
                   [](const Word& a, const Word& b) { return a.size() < b.size(); });
  basis_.reserve(words.size());
  for (const Word& w : words) {
    HallElement e;
    e.index = basis_.size();
    e.weight = static_cast<unsigned>(w.size());
    e.word = w;
    if (w.size() == 1) {
      e.letter = w[0];
    } else {
      // standard factorization: right factor is the longest proper Lyndon suffix
      for (std::size_t split = 1; split < w.size(); ++split) {
        Word suffix(w.begin() + static_cast<long>(split), w.end());
        if (is_lyndon(suffix)) {
          Word prefix(w.begin(), w.begin() + static_cast<long>(split));
          e.left = by_word_.at(prefix);
          e.right = by_word_.at(suffix);
          break;
        }
      }
    }
    by_word_.emplace(w, e.index);
    basis_.push_back(std::move(e));
  }
}

bool FreeLieAlgebra::hall_less(HallIndex a, HallIndex b) const {
  const Word& wa = basis_[a].word;
  const Word& wb = basis_[b].word;
  return std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end());
}

void FreeLieAlgebra::build_structure_constants() {
  const std::size_t n = basis_.size();
  std::map<std::pair<HallIndex, HallIndex>, Sparse> memo;

  // Rewrites [e_a, e_b] into the Hall basis using antisymmetry and the Jacobi
  // identity [[x,y],b] = [[x,b],y] + [x,[y,b]].
  std::function<const Sparse&(HallIndex, HallIndex)> rewrite =
      [&](HallIndex a, HallIndex b) -> const Sparse& {
    auto found = memo.find({a, b});
    if (found != memo.end()) return found->second;

    Sparse result;
    if (a != b && basis_[a].weight + basis_[b].weight <= c_) {
      if (!hall_less(a, b)) {
        accumulate(result, rewrite(b, a), -1);
      } else if (basis_[a].is_generator() || !hall_less(basis_[a].right, b)) {
        Word w = basis_[a].word;
        w.insert(w.end(), basis_[b].word.begin(), basis_[b].word.end());
        const HallIndex k = by_word_.at(w);
        if (basis_[k].left != a || basis_[k].right != b) {
          throw std::logic_error("Hall rewriting reached a non-standard factorization");
        }
        result[k] = 1;
      } else {
        const HallIndex x = basis_[a].left;
        const HallIndex y = basis_[a].right;
        const Sparse xb = rewrite(x, b);
        for (const auto& [k, coef] : xb) accumulate(result, rewrite(k, y), coef);
        const Sparse yb = rewrite(y, b);
        for (const auto& [k, coef] : yb) accumulate(result, rewrite(x, k), coef);
      }
    }
    return memo.emplace(std::make_pair(a, b), std::move(result)).first->second;
  };

  structure_.assign(n * n, {});
  for (HallIndex a = 0; a < n; ++a) {
    for (HallIndex b = 0; b < n; ++b) {
      if (basis_[a].weight + basis_[b].weight > c_) continue;
      structure_[a * n + b] = to_combination(rewrite(a, b));
    }
  }
}

void FreeLieAlgebra::build_expansions() {
  expansions_.resize(basis_.size());
  for (const HallElement& e : basis_) {
    auto& out = expansions_[e.index];
    if (e.is_generator()) {
      out[words_.index(e.word)] = 1;
      continue;
    }
    const auto& l = expansions_[e.left];
    const auto& r = expansions_[e.right];
    for (const auto& [wl, cl] : l) {
      for (const auto& [wr, cr] : r) {
        out[words_.concat(wl, wr)] += cl * cr;
        out[words_.concat(wr, wl)] -= cl * cr;
      }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  }
}

std::vector<std::size_t> FreeLieAlgebra::weight_counts() const {
  std::vector<std::size_t> counts(c_, 0);
  for (const HallElement& e : basis_) ++counts[e.weight - 1];
  return counts;
}

IntCombination FreeLieAlgebra::left_normed(const Word& word) const {
  if (word.empty() || word.size() > c_) return {};
  Sparse current{{generator(word[0]), 1}};
  for (std::size_t i = 1; i < word.size(); ++i) {
    Sparse next;
    for (const auto& [k, coef] : current) {
      for (const auto& [j, v] : bracket(k, generator(word[i]))) {
        auto& slot = next[j];
        slot += coef * v;
        if (slot == 0) next.erase(j);
      }
    }
    current = std::move(next);
  }
  return to_combination(current);
}

std::string FreeLieAlgebra::to_string(HallIndex i) const {
  const HallElement& e = basis_[i];
  if (e.is_generator()) return "x" + std::to_string(e.letter + 1);
  return "[" + to_string(e.left) + "," + to_string(e.right) + "]";
}

std::vector<HallElement> hall_basis(unsigned d, unsigned c) {
  return FreeLieAlgebra::get(d, c)->basis();
}

}  // namespace disposition
