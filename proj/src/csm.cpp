#include "csmkit/csm.hpp"

#include <algorithm>

#include "csmkit/error.hpp"

namespace csmkit {

HomologyClass HomologyClass::basis(WeylElem w) {
  HomologyClass out;
  out.terms_.emplace(w, Rational(1));
  return out;
}

Rational HomologyClass::coefficient(WeylElem w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HomologyClass::add(WeylElem w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HomologyClass& HomologyClass::operator+=(const HomologyClass& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

HomologyClass& HomologyClass::operator-=(const HomologyClass& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

HomologyClass& HomologyClass::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

HomologyClass chevalley(const WeylGroup& group, const Root& lambda, const HomologyClass& xi) {
  HomologyClass out;
  for (const auto& [w, c] : xi.terms()) {
    for (const PositiveRoot& pr : group.positive_roots()) {
      const WeylElem target = group.multiply(w, pr.reflection);
      if (group.length(target) != group.length(w) - 1) continue;
      const int weight = group.pairing(lambda, pr.coroot);
      if (weight != 0) out.add(target, c * weight);
    }
  }
  return out;
}

HomologyClass bgg_apply(const WeylGroup& group, int k, const HomologyClass& xi) {
  HomologyClass out;
  for (const auto& [w, c] : xi.terms()) {
    const WeylElem ws = group.right_mul(w, k);
    if (group.length(ws) > group.length(w)) out.add(ws, c);
  }
  return out;
}

HomologyClass weyl_apply(const WeylGroup& group, int k, const HomologyClass& xi) {
  HomologyClass out = xi;
  out -= chevalley(group, simple_root(group.rank(), k), bgg_apply(group, k, xi));
  return out;
}

HomologyClass t_k_apply(const WeylGroup& group, int k, const HomologyClass& xi) {
  HomologyClass out = bgg_apply(group, k, xi);
  out -= weyl_apply(group, k, xi);
  return out;
}

HomologyClass csm_cell_word(const WeylGroup& group, std::span<const int> word) {
  HomologyClass acc = HomologyClass::point();
  for (int k : word) acc = t_k_apply(group, k, acc);
  for (const auto& [v, c] : acc.terms()) {
    if (c.get_den() != 1) throw Error("non-integral CSM coefficient at " + group.name(v));
  }
  return acc;
}

HomologyClass csm_cell(const WeylGroup& group, WeylElem w) {
  return csm_cell_word(group, group.reduced_word(w));
}

NilHeckeElem csm_cell_equivariant_word(const WeylGroup& group, std::span<const int> word) {
  const int r = group.rank();
  NilHeckeElem acc = NilHeckeElem::one(r);
  // (s_i + x_i) E = E + (1 + alpha_i) x_i E
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    NilHeckeElem shifted = left_mul_generator(group, *it, acc);
    RootPoly factor = simple_root_poly(r, *it);
    factor += constant_poly(r, 1);
    acc += shifted.scale(factor);
  }
  return acc;
}

NilHeckeElem csm_cell_equivariant(const WeylGroup& group, WeylElem w) {
  return csm_cell_equivariant_word(group, group.reduced_word(w));
}

HomologyClass specialize_zero(const NilHeckeElem& a) {
  HomologyClass out;
  for (const auto& [v, f] : a.terms()) out.add(v, f.constant_term());
  return out;
}

RootPoly localization(const WeylGroup& group, WeylElem w, WeylElem v) {
  return weyl_as_nilhecke(group, w).coefficient(v);
}

RootPoly top_degree(const WeylGroup& group, WeylElem w, WeylElem v) {
  return csm_cell_equivariant(group, w).coefficient(v).homogeneous_part(group.length(v));
}

namespace {

// word in R(target)
bool reduced_to(const WeylGroup& group, const Word& word, WeylElem target) {
  if (static_cast<int>(word.size()) != group.length(target)) return false;
  return group.from_word(word) == target;
}

}  // namespace

RootPoly aggregate_ct(const WeylGroup& group, const WordCoproduct& coproduct, WeylElem v) {
  RootPoly total(group.rank());
  for (const auto& [key, coeff] : coproduct.terms()) {
    if (reduced_to(group, key.first, v)) total += coeff;
  }
  return total;
}

RootPoly aggregate_lr(const WeylGroup& group, const WordCoproduct& coproduct, WeylElem u, WeylElem v) {
  RootPoly total(group.rank());
  for (const auto& [key, coeff] : coproduct.terms()) {
    if (reduced_to(group, key.first, u) && reduced_to(group, key.second, v)) total += coeff;
  }
  return total;
}

Rational aggregate_f(const WeylGroup& group, const WordCoproduct& coproduct, WeylElem v, WeylElem u) {
  const std::size_t m = coproduct.word().size();
  Rational total = 0;
  for (const auto& [key, coeff] : coproduct.terms()) {
    if (key.first.size() + key.second.size() != m) continue;
    if (!reduced_to(group, key.first, v)) continue;
    if (group.from_word(key.second) != u) continue;
    total += coeff.constant_term();
  }
  return total;
}

RootPoly csm_via_aggregation(const WeylGroup& group, WeylElem w, WeylElem v) {
  return aggregate_ct(group, word_coproduct(group.cartan(), group.reduced_word(w)), v);
}

Rational f_via_aggregation(const WeylGroup& group, WeylElem w, WeylElem v, WeylElem u) {
  return aggregate_f(group, word_coproduct(group.cartan(), group.reduced_word(w)), v, u);
}

void validate_parabolic(const WeylGroup& group, std::span<const int> parabolic) {
  for (std::size_t k = 0; k < parabolic.size(); ++k) {
    if (parabolic[k] < 1 || parabolic[k] > group.rank()) {
      throw InvalidInput("parabolic index " + std::to_string(parabolic[k]) + " out of range");
    }
    if (k > 0 && parabolic[k] <= parabolic[k - 1]) {
      throw InvalidInput("parabolic index set must be strictly increasing");
    }
  }
}

WeylElem minimal_coset_rep(const WeylGroup& group, WeylElem w, std::span<const int> parabolic) {
  validate_parabolic(group, parabolic);
  bool lowered = true;
  while (lowered) {
    lowered = false;
    for (int i : parabolic) {
      if (group.is_right_descent(w, i)) {
        w = group.right_mul(w, i);
        lowered = true;
      }
    }
  }
  return w;
}

bool is_minimal_in_coset(const WeylGroup& group, WeylElem w, std::span<const int> parabolic) {
  validate_parabolic(group, parabolic);
  return std::none_of(parabolic.begin(), parabolic.end(),
                      [&](int i) { return group.is_right_descent(w, i); });
}

HomologyClass parabolic_pushforward(const WeylGroup& group, const HomologyClass& xi,
                                    std::span<const int> parabolic) {
  validate_parabolic(group, parabolic);
  HomologyClass out;
  for (const auto& [w, c] : xi.terms()) {
    if (is_minimal_in_coset(group, w, parabolic)) out.add(w, c);
  }
  return out;
}

}  // namespace csmkit
