#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace disposition {

using Word = std::vector<std::uint8_t>;
using HallIndex = std::size_t;

/// A basic commutator: a generator, or a bracket of two earlier basis elements.
///
/// The basis is the Lyndon-word Hall set: each element's foliage is a Lyndon
/// word and its bracketing is the standard factorization. Elements are listed
/// by weight, then lexicographically by foliage, so children always precede
/// their parent.
struct HallElement {
  HallIndex index = 0;
  unsigned weight = 1;
  int letter = -1;  // generator number (0-based) when weight == 1
  HallIndex left = 0;
  HallIndex right = 0;
  Word word;  // foliage

  bool is_generator() const { return weight == 1; }
};

/// Integer linear combination of Hall basis elements, sorted by index.
using IntCombination = std::vector<std::pair<HallIndex, std::int64_t>>;

/// Dense word indexing for the truncated free associative algebra on d letters:
/// words of length 0..c, grouped by length, each group in base-d order.
class WordIndexer {
 public:
  WordIndexer(unsigned d, unsigned c);

  unsigned letters() const { return d_; }
  unsigned max_length() const { return c_; }
  std::size_t size() const { return offsets_.back(); }
  std::size_t offset(unsigned length) const { return offsets_[length]; }
  std::size_t count(unsigned length) const { return offsets_[length + 1] - offsets_[length]; }

  std::size_t index(const Word& word) const;
  Word word(std::size_t index) const;
  unsigned length(std::size_t index) const;

  /// Index of the concatenation; caller ensures total length <= c.
  std::size_t concat(std::size_t a, std::size_t b) const;

 private:
  unsigned d_;
  unsigned c_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> powers_;
};

/// Free nilpotent Lie ring of rank d and class c on its Hall basis, with
/// integer structure constants and the embedding into the free associative
/// algebra. Built once per (d, c) and immutable afterwards.
class FreeLieAlgebra {
 public:
  /// Shared, cached instance for (d, c).
  static std::shared_ptr<const FreeLieAlgebra> get(unsigned d, unsigned c);

  FreeLieAlgebra(unsigned d, unsigned c);

  unsigned rank() const { return d_; }
  unsigned max_weight() const { return c_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<HallElement>& basis() const { return basis_; }
  const HallElement& element(HallIndex i) const { return basis_[i]; }
  HallIndex generator(unsigned letter) const { return letter; }

  /// Basis elements of each weight 1..c.
  std::vector<std::size_t> weight_counts() const;

  /// Hall order: lexicographic on foliage (a proper prefix is smaller).
  bool hall_less(HallIndex a, HallIndex b) const;

  /// [e_a, e_b] on the Hall basis, truncated above weight c.
  const IntCombination& bracket(HallIndex a, HallIndex b) const {
    return structure_[a * basis_.size() + b];
  }

  /// Associative expansion of a basis element ([u,v] -> uv - vu).
  const std::map<std::size_t, std::int64_t>& expansion(HallIndex i) const {
    return expansions_[i];
  }

  const WordIndexer& words() const { return words_; }

  /// Left-normed bracket [[..[a_1,a_2],..],a_n] of a word, on the Hall basis.
  IntCombination left_normed(const Word& word) const;

  std::string to_string(HallIndex i) const;

 private:
  void build_basis();
  void build_structure_constants();
  void build_expansions();

  unsigned d_;
  unsigned c_;
  std::vector<HallElement> basis_;
  std::map<Word, HallIndex> by_word_;
  std::vector<IntCombination> structure_;
  std::vector<std::map<std::size_t, std::int64_t>> expansions_;
  WordIndexer words_;
};

/// Hall basis of the free nilpotent Lie ring of rank d, class c, in canonical order.
std::vector<HallElement> hall_basis(unsigned d, unsigned c);

}  // namespace disposition
