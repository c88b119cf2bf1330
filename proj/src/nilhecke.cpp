#include "csmkit/nilhecke.hpp"

#include "csmkit/error.hpp"

namespace csmkit {

namespace {

void accumulate(std::map<WeylElem, RootPoly>& terms, WeylElem w, const RootPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

NilHeckeElem NilHeckeElem::one(int rank) { return basis(rank, WeylElem{0}); }

NilHeckeElem NilHeckeElem::basis(int rank, WeylElem w) {
  return term(w, constant_poly(rank, 1));
}

NilHeckeElem NilHeckeElem::term(WeylElem w, RootPoly coeff) {
  NilHeckeElem out(coeff.nvars());
  out.add(w, coeff);
  return out;
}

void NilHeckeElem::check_rank(int rank) const {
  if (rank != rank_) throw InvalidInput("nil-Hecke elements over different Cartan data (rank mismatch)");
}

RootPoly NilHeckeElem::coefficient(WeylElem w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RootPoly(rank_) : it->second;
}

void NilHeckeElem::add(WeylElem w, const RootPoly& coeff) {
  check_rank(coeff.nvars());
  accumulate(terms_, w, coeff);
}

NilHeckeElem& NilHeckeElem::operator+=(const NilHeckeElem& other) {
  check_rank(other.rank_);
  for (const auto& [w, c] : other.terms_) accumulate(terms_, w, c);
  return *this;
}

NilHeckeElem& NilHeckeElem::operator-=(const NilHeckeElem& other) {
  check_rank(other.rank_);
  for (const auto& [w, c] : other.terms_) accumulate(terms_, w, -c);
  return *this;
}

NilHeckeElem& NilHeckeElem::scale(const RootPoly& f) {
  check_rank(f.nvars());
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second = f * it->second;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

RootPoly NilHeckeTensorElem::coefficient(WeylElem u, WeylElem v) const {
  auto it = terms_.find({u, v});
  return it == terms_.end() ? RootPoly(rank_) : it->second;
}

void NilHeckeTensorElem::add(WeylElem u, WeylElem v, const RootPoly& coeff) {
  if (coeff.nvars() != rank_) throw InvalidInput("tensor coefficient rank mismatch");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({u, v}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NilHeckeElem left_mul_generator(const WeylGroup& group, int i, const NilHeckeElem& a) {
  if (a.rank() != group.rank()) throw InvalidInput("element rank does not match the Weyl group");
  NilHeckeElem out(a.rank());
  for (const auto& [v, g] : a.terms()) {
    auto [reflected, constant] = commute_past_generator(group.cartan(), i, g);
    const WeylElem sv = group.left_mul(i, v);
    if (group.length(sv) > group.length(v)) out.add(sv, reflected);
    out.add(v, constant);
  }
  return out;
}

namespace {

// x_{word} * a, letters applied right to left.
NilHeckeElem apply_word_left(const WeylGroup& group, std::span<const int> word, NilHeckeElem a) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) a = left_mul_generator(group, *it, a);
  return a;
}

}  // namespace

NilHeckeElem commute_poly_left(const WeylGroup& group, WeylElem w, const RootPoly& f) {
  return apply_word_left(group, group.reduced_word(w), NilHeckeElem::term(group.identity(), f));
}

NilHeckeElem mul(const WeylGroup& group, const NilHeckeElem& a, const NilHeckeElem& b) {
  if (a.rank() != b.rank()) throw InvalidInput("nil-Hecke elements over different Cartan data (rank mismatch)");
  NilHeckeElem out(a.rank());
  for (const auto& [u, f] : a.terms()) {
    NilHeckeElem piece = apply_word_left(group, group.reduced_word(u), b);
    out += piece.scale(f);
  }
  return out;
}

NilHeckeElem generator_product(const WeylGroup& group, std::span<const int> word) {
  return apply_word_left(group, word, NilHeckeElem::one(group.rank()));
}

NilHeckeElem simple_reflection_element(const WeylGroup& group, int i) {
  NilHeckeElem out = NilHeckeElem::one(group.rank());
  out.add(group.simple(i), simple_root_poly(group.rank(), i));
  return out;
}

NilHeckeElem word_as_nilhecke(const WeylGroup& group, std::span<const int> word) {
  NilHeckeElem acc = NilHeckeElem::one(group.rank());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    NilHeckeElem shifted = left_mul_generator(group, *it, acc);
    acc += shifted.scale(simple_root_poly(group.rank(), *it));
  }
  return acc;
}

NilHeckeElem weyl_as_nilhecke(const WeylGroup& group, WeylElem w) {
  return word_as_nilhecke(group, group.reduced_word(w));
}

NilHeckeTensorElem coproduct_of_word(const WeylGroup& group, std::span<const int> word) {
  const int r = group.rank();
  NilHeckeTensorElem acc(r);
  acc.add(group.identity(), group.identity(), constant_poly(r, 1));

  // Right multiplication keeps the product well defined on the balanced
  // tensors that images of the coproduct are.
  for (int i : word) {
    const RootPoly alpha = simple_root_poly(r, i);
    std::map<WeylElem, NilHeckeElem> commuted;  // x_u alpha_i
    NilHeckeTensorElem next(r);
    for (const auto& [key, f] : acc.terms()) {
      const auto [u, v] = key;
      // (x_u (x) x_v)(x_i (x) 1)
      const WeylElem us = group.right_mul(u, i);
      if (group.length(us) > group.length(u)) next.add(us, v, f);

      // (x_u (x) x_v)(s_i (x) x_i) = x_u (x) x_v x_i + (x_u alpha_i) x_i (x) x_v x_i
      const WeylElem vs = group.right_mul(v, i);
      if (group.length(vs) < group.length(v)) continue;
      next.add(u, vs, f);
      auto it = commuted.find(u);
      if (it == commuted.end()) it = commuted.emplace(u, commute_poly_left(group, u, alpha)).first;
      for (const auto& [u2, g] : it->second.terms()) {
        const WeylElem u2s = group.right_mul(u2, i);
        if (group.length(u2s) > group.length(u2)) next.add(u2s, vs, f * g);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

NilHeckeTensorElem coproduct_lr(const WeylGroup& group, WeylElem w) {
  return coproduct_of_word(group, group.reduced_word(w));
}

}  // namespace csmkit
