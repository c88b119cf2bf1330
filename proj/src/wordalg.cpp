#include "csmkit/wordalg.hpp"

#include <bit>

#include "csmkit/error.hpp"

namespace csmkit {

namespace {

void check_word(const CartanData& cartan, std::span<const int> word) {
  if (word.size() > static_cast<std::size_t>(kMaxWordLength)) {
    throw InvalidInput("word longer than " + std::to_string(kMaxWordLength) + " letters");
  }
  for (int letter : word) {
    if (letter < 1 || letter > cartan.rank) throw InvalidInput("word letter out of range");
  }
}

}  // namespace

WordAlgElem WordAlgElem::term(Word word, RootPoly coeff) {
  WordAlgElem out(coeff.nvars());
  out.add(word, coeff);
  return out;
}

WordAlgElem WordAlgElem::one(int rank) { return term({}, constant_poly(rank, 1)); }

RootPoly WordAlgElem::coefficient(const Word& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? RootPoly(rank_) : it->second;
}

void WordAlgElem::add(const Word& word, const RootPoly& coeff) {
  if (coeff.nvars() != rank_) throw InvalidInput("word algebra coefficient rank mismatch");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(word, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WordAlgElem& WordAlgElem::operator+=(const WordAlgElem& other) {
  if (other.rank_ != rank_) throw InvalidInput("word algebra elements of different rank");
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

WordAlgElem& WordAlgElem::scale(const RootPoly& f) {
  if (f.nvars() != rank_) throw InvalidInput("word algebra coefficient rank mismatch");
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second = f * it->second;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

WordAlgElem left_mul_generator(const CartanData& cartan, int i, const WordAlgElem& a) {
  if (a.rank() != cartan.rank) throw InvalidInput("element rank does not match the Cartan data");
  WordAlgElem out(a.rank());
  for (const auto& [word, g] : a.terms()) {
    auto [reflected, constant] = commute_past_generator(cartan, i, g);
    Word longer;
    longer.reserve(word.size() + 1);
    longer.push_back(i);
    longer.insert(longer.end(), word.begin(), word.end());
    out.add(longer, reflected);
    out.add(word, constant);
  }
  return out;
}

WordAlgElem mul_word(const CartanData& cartan, const WordAlgElem& a, const WordAlgElem& b) {
  if (a.rank() != b.rank()) throw InvalidInput("word algebra elements of different rank");
  WordAlgElem out(a.rank());
  for (const auto& [word, f] : a.terms()) {
    check_word(cartan, word);
    WordAlgElem piece = b;
    for (auto it = word.rbegin(); it != word.rend(); ++it) piece = left_mul_generator(cartan, *it, piece);
    out += piece.scale(f);
  }
  return out;
}

PositionSet positions_to_set(std::span<const int> positions, std::size_t word_length) {
  PositionSet set = 0;
  for (int p : positions) {
    if (p < 1 || static_cast<std::size_t>(p) > word_length) {
      throw InvalidInput("position " + std::to_string(p) + " out of range for a word of length " +
                         std::to_string(word_length));
    }
    set |= PositionSet{1} << (p - 1);
  }
  return set;
}

Word subword(std::span<const int> word, PositionSet positions) {
  Word out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if ((positions >> k) & 1u) out.push_back(word[k]);
  }
  return out;
}

WordAlgElem mixed_product(const CartanData& cartan, std::span<const int> word,
                          std::span<const int> positions) {
  check_word(cartan, word);
  return mixed_product(cartan, word, positions_to_set(positions, word.size()));
}

WordAlgElem mixed_product(const CartanData& cartan, std::span<const int> word, PositionSet positions) {
  check_word(cartan, word);
  if (word.size() < 32 && (positions >> word.size()) != 0) {
    throw InvalidInput("position set exceeds the word length");
  }
  WordAlgElem acc = WordAlgElem::one(cartan.rank);
  for (std::size_t k = word.size(); k-- > 0;) {
    const int i = word[k];
    WordAlgElem shifted = left_mul_generator(cartan, i, acc);
    if ((positions >> k) & 1u) {
      acc += shifted.scale(simple_root_poly(cartan.rank, i));  // s_i = 1 + alpha_i x_i
    } else {
      acc = std::move(shifted);
    }
  }
  return acc;
}

RootPoly relative_lr(const CartanData& cartan, std::span<const int> word, const Word& first,
                     const Word& second) {
  check_word(cartan, word);
  RootPoly total(cartan.rank);
  if (first.size() > word.size() || second.size() > word.size()) return total;
  const PositionSet limit = PositionSet{1} << word.size();
  for (PositionSet set = 0; set < limit; ++set) {
    if (static_cast<std::size_t>(std::popcount(set)) != first.size()) continue;
    if (subword(word, set) != first) continue;
    total += mixed_product(cartan, word, set).coefficient(second);
  }
  return total;
}

NilHeckeElem mu_map(const WeylGroup& group, const WordAlgElem& a) {
  if (a.rank() != group.rank()) throw InvalidInput("element rank does not match the Weyl group");
  NilHeckeElem out(a.rank());
  for (const auto& [word, f] : a.terms()) {
    if (group.is_reduced(word)) out.add(group.from_word(word), f);
  }
  return out;
}

RootPoly WordCoproduct::coefficient(const Word& first, const Word& second) const {
  auto it = terms_.find({first, second});
  return it == terms_.end() ? RootPoly(rank_) : it->second;
}

WordCoproduct word_coproduct(const CartanData& cartan, std::span<const int> word) {
  check_word(cartan, word);
  const int r = cartan.rank;
  // Right tensor factor is scalar free, so position sets with the same
  // subword can be merged as soon as they agree on the processed suffix.
  std::map<Word, WordAlgElem, ShortLex> partial;
  partial.emplace(Word{}, WordAlgElem::one(r));
  for (std::size_t k = word.size(); k-- > 0;) {
    const int i = word[k];
    std::map<Word, WordAlgElem, ShortLex> next;
    for (const auto& [right, elem] : partial) {
      WordAlgElem shifted = left_mul_generator(cartan, i, elem);
      // E(k) = x_i: right word unchanged.
      next.try_emplace(right, r).first->second += shifted;
      // E(k) = s_i: letter joins the right word.
      Word longer{i};
      longer.insert(longer.end(), right.begin(), right.end());
      WordAlgElem with_s = elem;
      with_s += shifted.scale(simple_root_poly(r, i));
      next.try_emplace(longer, r).first->second += with_s;
    }
    partial = std::move(next);
  }
  WordCoproduct::TermMap terms;
  for (const auto& [first, elem] : partial) {
    for (const auto& [second, coeff] : elem.terms()) terms.emplace(std::make_pair(first, second), coeff);
  }
  return WordCoproduct(Word(word.begin(), word.end()), r, std::move(terms));
}

}  // namespace csmkit
