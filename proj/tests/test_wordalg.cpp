#include "doctest.h"

#include <random>

#include "csmkit/error.hpp"
#include "csmkit/wordalg.hpp"
#include "support.hpp"

using namespace csmkit;
using testing::alpha;
using testing::constant;

namespace {

const CartanData& a2() {
  static const CartanData cd = cartan_from_label("A2");
  return cd;
}

WordAlgElem xw(int rank, Word word) { return WordAlgElem::term(std::move(word), constant(rank, 1)); }

// All words over {1..r} of length <= m.
std::vector<Word> all_words(int r, int m) {
  std::vector<Word> out = {{}};
  std::size_t begin = 0;
  for (int len = 1; len <= m; ++len) {
    const std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k) {
      for (int i = 1; i <= r; ++i) {
        Word w = out[k];
        w.push_back(i);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

}  // namespace

TEST_CASE("word algebra products") {
  const CartanData& cd = a2();
  CHECK(mul_word(cd, xw(2, {1}), xw(2, {1})) == xw(2, {1, 1}));

  WordAlgElem expected(2);
  expected.add({1}, -alpha(2, 1));
  expected.add({}, constant(2, -2));
  CHECK(mul_word(cd, xw(2, {1}), WordAlgElem::term({}, alpha(2, 1))) == expected);

  WordAlgElem a(2);
  a.add({2, 1}, alpha(2, 2));
  a.add({1}, constant(2, 3));
  CHECK(mul_word(cd, WordAlgElem::one(2), a) == a);
  CHECK(mul_word(cd, a, WordAlgElem::one(2)) == a);

  CHECK_THROWS_AS(mul_word(cd, xw(2, {3}), a), InvalidInput);
}

TEST_CASE("word algebra is associative") {
  const CartanData cd = cartan_from_label("B2");
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> letter(1, 2), len(0, 3), coeff(-3, 3);
  auto random_elem = [&]() {
    WordAlgElem e(2);
    for (int t = 0; t < 3; ++t) {
      Word w(len(rng));
      for (int& l : w) l = letter(rng);
      e.add(w, constant(2, coeff(rng)) + constant(2, coeff(rng)) * alpha(2, letter(rng)));
    }
    return e;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const WordAlgElem a = random_elem(), b = random_elem(), c = random_elem();
    CHECK(mul_word(cd, mul_word(cd, a, b), c) == mul_word(cd, a, mul_word(cd, b, c)));
  }
}

TEST_CASE("mixed product: s1 x2 s1") {
  const CartanData& cd = a2();
  const std::vector<int> word{1, 2, 1};
  const std::vector<int> positions{1, 3};
  WordAlgElem expected(2);
  expected.add({2}, constant(2, 1));
  expected.add({1, 2}, alpha(2, 1));
  expected.add({1}, constant(2, 1));
  expected.add({2, 1}, alpha(2, 2));
  expected.add({1, 1}, alpha(2, 1));
  expected.add({1, 2, 1}, alpha(2, 1) * alpha(2, 2));
  CHECK(mixed_product(cd, word, positions) == expected);

  CHECK(mixed_product(cd, word, std::vector<int>{}) == xw(2, {1, 2, 1}));

  WordAlgElem s1 = WordAlgElem::one(2);
  s1.add({1}, alpha(2, 1));
  CHECK(mixed_product(cd, std::vector<int>{1}, std::vector<int>{1}) == s1);

  CHECK_THROWS_AS(mixed_product(cd, word, std::vector<int>{4}), InvalidInput);
  CHECK_THROWS_AS(mixed_product(cd, word, std::vector<int>{0}), InvalidInput);
}

TEST_CASE("relative coefficients") {
  const CartanData& cd = a2();
  const std::vector<int> word{1, 2, 1};
  CHECK(relative_lr(cd, word, {1, 1}, {2, 1}) == alpha(2, 2));
  CHECK(relative_lr(cd, word, {1, 1}, {1, 2, 1}) == alpha(2, 1) * alpha(2, 2));
  for (const Word& w : {Word{}, Word{1}, Word{2, 1}, Word{1, 2, 1}, Word{1, 1, 2, 2}}) {
    CHECK(relative_lr(cd, w, w, {}) == constant(2, 1));
  }
}

TEST_CASE("word coproduct agrees with the subset-by-subset definition") {
  for (const char* label : {"A2", "B2"}) {
    const CartanData cd = cartan_from_label(label);
    for (const Word& word : all_words(2, 4)) {
      const WordCoproduct wc = word_coproduct(cd, word);
      // Reassemble from mixed products, one position set at a time.
      std::map<std::pair<Word, Word>, RootPoly> brute;
      for (PositionSet set = 0; set < (PositionSet{1} << word.size()); ++set) {
        const Word first = subword(word, set);
        const WordAlgElem product = mixed_product(cd, word, set);
        for (const auto& [second, coeff] : product.terms()) {
          auto [it, inserted] = brute.try_emplace({first, second}, coeff);
          if (!inserted) it->second += coeff;
        }
      }
      std::erase_if(brute, [](const auto& kv) { return kv.second.is_zero(); });
      CHECK(wc.terms() == WordCoproduct::TermMap(brute.begin(), brute.end()));

      for (const auto& [key, p] : wc.terms()) {
        const int degree = static_cast<int>(key.first.size() + key.second.size() - word.size());
        CHECK(degree >= 0);
        CHECK(p.is_homogeneous());
        CHECK(p.degree() == degree);
        if (degree == 0) CHECK(p.has_integer_coefficients());
        // Symmetric in the two word indices.
        CHECK(wc.coefficient(key.second, key.first) == p);
        CHECK(relative_lr(cd, word, key.first, key.second) == p);
      }
    }
  }
}

TEST_CASE("sum over all position sets is the product of s_i + x_i") {
  const CartanData cd = cartan_from_label("A3");
  const std::vector<int> word{2, 1, 3, 2};
  WordAlgElem total(3);
  for (PositionSet set = 0; set < 16; ++set) total += mixed_product(cd, word, set);
  WordAlgElem product = WordAlgElem::one(3);
  for (int i : word) {
    WordAlgElem factor = xw(3, {i});
    factor.add({}, constant(3, 1));
    factor.add({i}, alpha(3, i));
    product = mul_word(cd, product, factor);
  }
  CHECK(total == product);
}

TEST_CASE("mu map") {
  const WeylGroup g(a2());
  CHECK(mu_map(g, xw(2, {1, 1})).is_zero());
  CHECK(mu_map(g, xw(2, {1, 2})) == NilHeckeElem::basis(2, g.from_word(std::vector<int>{1, 2})));
  WordAlgElem a(2);
  a.add({2, 1}, alpha(2, 2));
  a.add({1, 1}, alpha(2, 1));
  CHECK(mu_map(g, a) == NilHeckeElem::term(g.from_word(std::vector<int>{2, 1}), alpha(2, 2)));
}

TEST_CASE("mu is compatible with products") {
  for (const char* label : {"A2", "A3", "B2", "G2"}) {
    const WeylGroup g(cartan_from_label(label));
    const int r = g.rank();
    for (const Word& word : all_words(r, 6)) {
      // Generators: mu(x_i * x_word) = x_i * mu(x_word).
      for (int i = 1; i <= r; ++i) {
        CHECK(mu_map(g, left_mul_generator(g.cartan(), i, xw(r, word))) ==
              left_mul_generator(g, i, mu_map(g, xw(r, word))));
      }
    }
    // Samples with polynomial coefficients.
    const RootPoly f = alpha(r, 1) * alpha(r, r) + constant(r, 2);
    for (const Word& u : all_words(r, 2)) {
      for (const Word& v : all_words(r, 2)) {
        const WordAlgElem a = WordAlgElem::term(u, f);
        const WordAlgElem b = WordAlgElem::term(v, alpha(r, 1));
        CHECK(mu_map(g, mul_word(g.cartan(), a, b)) == mul(g, mu_map(g, a), mu_map(g, b)));
      }
    }
  }
}

TEST_CASE("word-level aggregation reproduces p^w_{u,v}") {
  const WeylGroup g(cartan_from_label("A3"));
  for (WeylElem w : g.elements()) {
    const NilHeckeTensorElem d = coproduct_lr(g, w);
    for (const Word& word : g.reduced_words(w)) {
      const WordCoproduct wc = word_coproduct(g.cartan(), word);
      std::map<std::pair<WeylElem, WeylElem>, RootPoly> agg;
      for (const auto& [key, p] : wc.terms()) {
        if (!g.is_reduced(key.first) || !g.is_reduced(key.second)) continue;
        agg.try_emplace({g.from_word(key.first), g.from_word(key.second)}, 3).first->second += p;
      }
      std::erase_if(agg, [](const auto& kv) { return kv.second.is_zero(); });
      CHECK(d.terms() == NilHeckeTensorElem::TermMap(agg.begin(), agg.end()));
    }
  }
}
