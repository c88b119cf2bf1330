#pragma once

// The nil-Hecke algebra: left S-module with basis {x_w}, x_i^2 = 0, braid
// relations, and x_i f = s_i(f) x_i + D_i(f). Group elements embed through
// s_i = 1 + alpha_i x_i.

#include <map>
#include <utility>

#include "csmkit/cartan.hpp"
#include "csmkit/rootpoly.hpp"

namespace csmkit {

class NilHeckeElem {
 public:
  using TermMap = std::map<WeylElem, RootPoly>;

  NilHeckeElem() = default;
  explicit NilHeckeElem(int rank) : rank_(rank) {}

  static NilHeckeElem one(int rank);
  static NilHeckeElem basis(int rank, WeylElem w);
  static NilHeckeElem term(WeylElem w, RootPoly coeff);

  int rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RootPoly coefficient(WeylElem w) const;

  void add(WeylElem w, const RootPoly& coeff);
  NilHeckeElem& operator+=(const NilHeckeElem& other);
  NilHeckeElem& operator-=(const NilHeckeElem& other);
  // Left multiplication by a scalar polynomial.
  NilHeckeElem& scale(const RootPoly& f);

  friend bool operator==(const NilHeckeElem&, const NilHeckeElem&) = default;

 private:
  void check_rank(int rank) const;

  int rank_ = 0;
  TermMap terms_;
};

// Basis x_u (x) x_v with coefficients collected on the left factor.
class NilHeckeTensorElem {
 public:
  using Key = std::pair<WeylElem, WeylElem>;
  using TermMap = std::map<Key, RootPoly>;

  NilHeckeTensorElem() = default;
  explicit NilHeckeTensorElem(int rank) : rank_(rank) {}

  int rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  RootPoly coefficient(WeylElem u, WeylElem v) const;
  void add(WeylElem u, WeylElem v, const RootPoly& coeff);

  friend bool operator==(const NilHeckeTensorElem&, const NilHeckeTensorElem&) = default;

 private:
  int rank_ = 0;
  TermMap terms_;
};

// x_i * a
NilHeckeElem left_mul_generator(const WeylGroup& group, int i, const NilHeckeElem& a);

// x_w * f, expanded with coefficients on the left.
NilHeckeElem commute_poly_left(const WeylGroup& group, WeylElem w, const RootPoly& f);

NilHeckeElem mul(const WeylGroup& group, const NilHeckeElem& a, const NilHeckeElem& b);

// x_{i_1} ... x_{i_m}; zero unless the word is reduced.
NilHeckeElem generator_product(const WeylGroup& group, std::span<const int> word);

// 1 + alpha_i x_i
NilHeckeElem simple_reflection_element(const WeylGroup& group, int i);

// prod_j (1 + alpha_{i_j} x_{i_j}) along the given word.
NilHeckeElem word_as_nilhecke(const WeylGroup& group, std::span<const int> word);
// Same along the canonical reduced word of w. Coefficient of x_v is the
// localization sigma^w(v).
NilHeckeElem weyl_as_nilhecke(const WeylGroup& group, WeylElem w);

// Delta(x_{i_1}) ... Delta(x_{i_m}) with Delta(x_i) = x_i (x) 1 + s_i (x) x_i.
NilHeckeTensorElem coproduct_of_word(const WeylGroup& group, std::span<const int> word);
// Delta(x_w); the coefficient of x_u (x) x_v is p^w_{u,v}.
NilHeckeTensorElem coproduct_lr(const WeylGroup& group, WeylElem w);

}  // namespace csmkit
