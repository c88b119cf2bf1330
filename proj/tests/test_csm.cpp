#include "doctest.h"

#include "csmkit/csm.hpp"
#include "csmkit/error.hpp"
#include "support.hpp"

using namespace csmkit;
using testing::alpha;
using testing::constant;

namespace {

const WeylGroup& a2() {
  static const WeylGroup g(cartan_from_label("A2"));
  return g;
}

WeylElem el(const WeylGroup& g, std::vector<int> word) { return g.from_word(word); }

HomologyClass cls(const WeylGroup& g, std::initializer_list<std::pair<std::vector<int>, long>> terms) {
  HomologyClass out;
  for (const auto& [word, c] : terms) out.add(el(g, word), c);
  return out;
}

}  // namespace

TEST_CASE("Chevalley formula") {
  const WeylGroup a1(cartan_from_label("A1"));
  CHECK(chevalley(a1, simple_root(1, 1), HomologyClass::basis(a1.simple(1))) ==
        cls(a1, {{{}, 2}}));

  const WeylGroup& g = a2();
  CHECK(chevalley(g, simple_root(2, 1), HomologyClass::point()).is_zero());
  // <a2, a2^vee> = 2 on beta = a2 (to s1), <a2, a1^vee + a2^vee> = 1 on a1 + a2 (to s2).
  CHECK(chevalley(g, simple_root(2, 2), HomologyClass::basis(el(g, {1, 2}))) ==
        cls(g, {{{1}, 2}, {{2}, 1}}));
}

TEST_CASE("T_k and s_k operators") {
  const WeylGroup& g = a2();
  CHECK(t_k_apply(g, 1, HomologyClass::point()) == cls(g, {{{1}, 1}, {{}, 1}}));
  CHECK(weyl_apply(g, 1, HomologyClass::point()) == cls(g, {{{}, -1}}));

  const WeylGroup s4(cartan_from_label("A3"));
  for (WeylElem w : s4.elements()) {
    for (int k = 1; k <= 3; ++k) {
      const HomologyClass xi = HomologyClass::basis(w);
      CHECK(weyl_apply(s4, k, weyl_apply(s4, k, xi)) == xi);
    }
  }
}

TEST_CASE("CSM classes of cells") {
  const WeylGroup& g = a2();
  CHECK(csm_cell(g, g.identity()) == HomologyClass::point());
  CHECK(csm_cell(g, g.simple(1)) == cls(g, {{{1}, 1}, {{}, 1}}));
  CHECK(csm_cell(g, el(g, {1, 2})) == cls(g, {{{1, 2}, 1}, {{1}, 1}, {{2}, 2}, {{}, 1}}));

  // Support below w, leading coefficient 1, independent of reduced word.
  for (const char* label : {"A3", "B2", "G2"}) {
    const WeylGroup h(cartan_from_label(label));
    for (WeylElem w : h.elements()) {
      const HomologyClass c = csm_cell(h, w);
      CHECK(c.coefficient(w) == 1);
      for (const auto& [v, q] : c.terms()) CHECK(h.bruhat_leq(v, w));
      for (const Word& word : h.reduced_words(w)) CHECK(csm_cell_word(h, word) == c);
    }
  }
}

TEST_CASE("equivariant CSM classes") {
  const WeylGroup& g = a2();
  CHECK(csm_cell_equivariant(g, g.identity()) == NilHeckeElem::one(2));

  NilHeckeElem s1(2);
  s1.add(g.identity(), constant(2, 1));
  s1.add(g.simple(1), constant(2, 1) + alpha(2, 1));
  CHECK(csm_cell_equivariant(g, g.simple(1)) == s1);
  CHECK(specialize_zero(s1) == csm_cell(g, g.simple(1)));

  for (const char* label : {"A3", "B2", "G2"}) {
    const WeylGroup h(cartan_from_label(label));
    for (WeylElem w : h.elements()) {
      const NilHeckeElem e = csm_cell_equivariant(h, w);
      CHECK(specialize_zero(e) == csm_cell(h, w));
      CHECK(e.coefficient(w).constant_term() == 1);
      for (const Word& word : h.reduced_words(w)) CHECK(csm_cell_equivariant_word(h, word) == e);
      for (const auto& [v, f] : e.terms()) {
        CHECK(h.bruhat_leq(v, w));
        CHECK(f.degree() <= h.length(v));
        CHECK(f.has_integer_coefficients());
      }
    }
  }
}

TEST_CASE("aggregation formulas") {
  const WeylGroup& g = a2();
  const WeylElem w0 = g.longest();
  CHECK(csm_via_aggregation(g, w0, el(g, {2, 1})) == csm_cell_equivariant(g, w0).coefficient(el(g, {2, 1})));
  CHECK(csm_via_aggregation(g, g.simple(1), g.simple(2)).is_zero());
  for (WeylElem w : g.elements()) CHECK(csm_via_aggregation(g, w, w).constant_term() == 1);

  const WeylElem s1s2 = el(g, {1, 2});
  CHECK(f_via_aggregation(g, s1s2, g.simple(2), g.simple(2)) == 1);
  CHECK(f_via_aggregation(g, s1s2, g.simple(2), g.simple(1)) == 1);
  CHECK(f_via_aggregation(g, g.simple(1), g.simple(1), g.simple(2)) == 0);
}

TEST_CASE("localization and top degree") {
  const WeylGroup& g = a2();
  const WeylElem s1s2 = el(g, {1, 2});
  CHECK(localization(g, s1s2, g.simple(1)) == alpha(2, 1));
  CHECK(localization(g, s1s2, s1s2) == alpha(2, 1) * (alpha(2, 1) + alpha(2, 2)));
  CHECK(localization(g, g.simple(1), g.simple(2)).is_zero());
  for (WeylElem w : g.elements()) {
    for (WeylElem v : g.elements()) CHECK(top_degree(g, w, v) == localization(g, w, v));
  }
}

TEST_CASE("parabolic pushforward") {
  const WeylGroup& g = a2();
  const std::vector<int> p2{2};
  CHECK(parabolic_pushforward(g, csm_cell(g, el(g, {1, 2})), p2) == cls(g, {{{1}, 1}, {{}, 1}}));
  CHECK(parabolic_pushforward(g, HomologyClass::point(), p2) == HomologyClass::point());
  CHECK(parabolic_pushforward(g, HomologyClass::basis(g.simple(2)), p2).is_zero());

  CHECK_THROWS_AS(parabolic_pushforward(g, HomologyClass::point(), std::vector<int>{3}), InvalidInput);
  CHECK_THROWS_AS(parabolic_pushforward(g, HomologyClass::point(), std::vector<int>{2, 1}), InvalidInput);
  CHECK_THROWS_AS(parabolic_pushforward(g, HomologyClass::point(), std::vector<int>{1, 1}), InvalidInput);

  // Minimal coset representatives against a brute-force minimum over the coset.
  const WeylGroup s4(cartan_from_label("A3"));
  for (const std::vector<int>& parabolic : {std::vector<int>{1}, {1, 2}, {2, 3}, {1, 3}, {1, 2, 3}}) {
    std::vector<WeylElem> subgroup;
    for (WeylElem u : s4.elements()) {
      bool inside = true;
      for (int letter : s4.reduced_word(u)) {
        inside = inside && std::find(parabolic.begin(), parabolic.end(), letter) != parabolic.end();
      }
      if (inside) subgroup.push_back(u);
    }
    for (WeylElem w : s4.elements()) {
      WeylElem best = w;
      for (WeylElem u : subgroup) {
        const WeylElem candidate = s4.multiply(w, u);
        if (s4.length(candidate) < s4.length(best)) best = candidate;
      }
      CHECK(minimal_coset_rep(s4, w, parabolic) == best);
      CHECK(is_minimal_in_coset(s4, w, parabolic) == (best == w));
    }
  }
}
