#pragma once

// The generalized nil-Hecke algebra on the free monoid: basis x_w indexed by
// arbitrary words, no nilpotency and no braid relations, same commutation
// rule x_i f = s_i(f) x_i + D_i(f) as the nil-Hecke algebra.

#include <cstdint>
#include <map>
#include <span>
#include <utility>

#include "csmkit/cartan.hpp"
#include "csmkit/nilhecke.hpp"
#include "csmkit/rootpoly.hpp"

namespace csmkit {

// Shorter words first, then lexicographic.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class WordAlgElem {
 public:
  using TermMap = std::map<Word, RootPoly, ShortLex>;

  WordAlgElem() = default;
  explicit WordAlgElem(int rank) : rank_(rank) {}

  static WordAlgElem term(Word word, RootPoly coeff);
  static WordAlgElem one(int rank);

  int rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RootPoly coefficient(const Word& word) const;

  void add(const Word& word, const RootPoly& coeff);
  WordAlgElem& operator+=(const WordAlgElem& other);
  WordAlgElem& scale(const RootPoly& f);

  friend bool operator==(const WordAlgElem&, const WordAlgElem&) = default;

 private:
  int rank_ = 0;
  TermMap terms_;
};

// x_i * a
WordAlgElem left_mul_generator(const CartanData& cartan, int i, const WordAlgElem& a);

WordAlgElem mul_word(const CartanData& cartan, const WordAlgElem& a, const WordAlgElem& b);

// Subsets of positions of a word, bit k-1 standing for position k.
using PositionSet = std::uint32_t;
constexpr int kMaxWordLength = 24;

PositionSet positions_to_set(std::span<const int> positions, std::size_t word_length);
Word subword(std::span<const int> word, PositionSet positions);

// prod_j E(j) with E(j) = s_{i_j} for j in the set and x_{i_j} otherwise.
WordAlgElem mixed_product(const CartanData& cartan, std::span<const int> word,
                          std::span<const int> positions);
WordAlgElem mixed_product(const CartanData& cartan, std::span<const int> word, PositionSet positions);

// p^word_{first, second}: sum of mixed products over the position sets K' with
// word|K' = first, then the coefficient of x_{second}.
RootPoly relative_lr(const CartanData& cartan, std::span<const int> word, const Word& first,
                     const Word& second);

// Sends x_word to x_{w_word} for reduced words and to 0 otherwise.
NilHeckeElem mu_map(const WeylGroup& group, const WordAlgElem& a);

// All relative coefficients of one word at once, indexed (first, second) in
// the same orientation as relative_lr. Built by grouping position sets with
// equal subwords while expanding right to left.
class WordCoproduct {
 public:
  using Key = std::pair<Word, Word>;
  using TermMap = std::map<Key, RootPoly>;

  WordCoproduct() = default;
  WordCoproduct(Word word, int rank, TermMap terms)
      : word_(std::move(word)), rank_(rank), terms_(std::move(terms)) {}

  const Word& word() const { return word_; }
  int rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  RootPoly coefficient(const Word& first, const Word& second) const;

  friend bool operator==(const WordCoproduct&, const WordCoproduct&) = default;

 private:
  Word word_;
  int rank_ = 0;
  TermMap terms_;
};

WordCoproduct word_coproduct(const CartanData& cartan, std::span<const int> word);

}  // namespace csmkit
