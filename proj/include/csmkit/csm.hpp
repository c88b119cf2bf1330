#pragma once

// CSM classes of Schubert cells. Two pipelines: the T_k recursion on
// H_*(G/B) driven by the Chevalley formula, and the equivariant product
// prod (s_i + x_i) in the nil-Hecke algebra, where x_v stands for [X(v)]_T.

#include <map>
#include <span>

#include "csmkit/cartan.hpp"
#include "csmkit/nilhecke.hpp"
#include "csmkit/rootpoly.hpp"
#include "csmkit/wordalg.hpp"

namespace csmkit {

// Rational combination of Schubert classes [X(v)].
class HomologyClass {
 public:
  using TermMap = std::map<WeylElem, Rational>;

  static HomologyClass point() { return basis(WeylElem{0}); }
  static HomologyClass basis(WeylElem w);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(WeylElem w) const;

  void add(WeylElem w, const Rational& c);
  HomologyClass& operator+=(const HomologyClass& other);
  HomologyClass& operator-=(const HomologyClass& other);
  HomologyClass& operator*=(const Rational& c);

  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

 private:
  TermMap terms_;
};

// c_1(L_lambda) . xi = sum <lambda, beta^vee> [X(w s_beta)] over lowering beta.
HomologyClass chevalley(const WeylGroup& group, const Root& lambda, const HomologyClass& xi);

// [X(w)] -> [X(w s_k)] if the length goes up, else 0.
HomologyClass bgg_apply(const WeylGroup& group, int k, const HomologyClass& xi);

// s_k = id - c_1(L_{alpha_k}) d_k
HomologyClass weyl_apply(const WeylGroup& group, int k, const HomologyClass& xi);

// T_k = d_k - s_k
HomologyClass t_k_apply(const WeylGroup& group, int k, const HomologyClass& xi);

// T_{i_m} ... T_{i_1} [X(id)] along a word; equals csm(X(w)°) for reduced words.
// Throws Error if a coefficient comes out non-integral.
HomologyClass csm_cell_word(const WeylGroup& group, std::span<const int> word);
HomologyClass csm_cell(const WeylGroup& group, WeylElem w);

// prod_j (s_{i_j} + x_{i_j}); the coefficient of x_v is c_T(w;v).
NilHeckeElem csm_cell_equivariant_word(const WeylGroup& group, std::span<const int> word);
NilHeckeElem csm_cell_equivariant(const WeylGroup& group, WeylElem w);

// Coefficientwise constant term.
HomologyClass specialize_zero(const NilHeckeElem& a);

// sigma^w(v): the coefficient of x_v in w = prod (1 + alpha_i x_i).
RootPoly localization(const WeylGroup& group, WeylElem w, WeylElem v);
// Degree l(v) part of c_T(w;v).
RootPoly top_degree(const WeylGroup& group, WeylElem w, WeylElem v);

// Aggregates over the word-level coefficients of one word i in R(w).
// c_T(w;v): first subword in R(v), any second word.
RootPoly aggregate_ct(const WeylGroup& group, const WordCoproduct& coproduct, WeylElem v);
// p^w_{u,v}: first subword in R(u), second word in R(v).
RootPoly aggregate_lr(const WeylGroup& group, const WordCoproduct& coproduct, WeylElem u, WeylElem v);
// f(w,v,u): first subword in R(v), second word multiplying to u, lengths
// adding up to |i|, constant terms only. The second word need not be reduced.
Rational aggregate_f(const WeylGroup& group, const WordCoproduct& coproduct, WeylElem v, WeylElem u);

RootPoly csm_via_aggregation(const WeylGroup& group, WeylElem w, WeylElem v);
Rational f_via_aggregation(const WeylGroup& group, WeylElem w, WeylElem v, WeylElem u);

// Sorted, duplicate-free subset of 1..r; throws InvalidInput otherwise.
void validate_parabolic(const WeylGroup& group, std::span<const int> parabolic);
// Minimal length element of w W_P.
WeylElem minimal_coset_rep(const WeylGroup& group, WeylElem w, std::span<const int> parabolic);
bool is_minimal_in_coset(const WeylGroup& group, WeylElem w, std::span<const int> parabolic);

// [X(w)] -> [X(w)] if w is minimal in w W_P, else 0. The result is indexed by
// the minimal representatives.
HomologyClass parabolic_pushforward(const WeylGroup& group, const HomologyClass& xi,
                                    std::span<const int> parabolic);

}  // namespace csmkit
