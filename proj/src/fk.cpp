#include "csmkit/fk.hpp"

#include "csmkit/error.hpp"
#include "csmkit/schubert.hpp"

namespace csmkit {

GroupVector GroupVector::basis(WeylElem w) {
  GroupVector out;
  out.terms_.emplace(w, 1);
  return out;
}

long GroupVector::coefficient(WeylElem w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void GroupVector::add(WeylElem w, long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupVector& GroupVector::operator+=(const GroupVector& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

GroupVector& GroupVector::operator-=(const GroupVector& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

GroupVector& GroupVector::operator*=(long c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

FKGenerator FKGenerator::make(int a, int b) {
  if (a == b) throw InvalidInput("Fomin-Kirillov generator needs two distinct indices");
  return a < b ? FKGenerator{a, b, 1} : FKGenerator{b, a, -1};
}

FKContext::FKContext(const WeylGroup& group) : group_(group), n_(group.rank() + 1) {
  if (!group.type_a()) throw InvalidInput("Fomin-Kirillov actions need a type A Weyl group");
  const std::size_t size = group.size();
  bruhat_.assign(static_cast<std::size_t>(n_) * n_ * size, kNone);
  extended_.assign(bruhat_.size(), kNone);
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      const WeylElem t = group.transposition(i, j);
      const std::size_t base = ((i - 1) * n_ + (j - 1)) * size;
      for (WeylElem w : group.elements()) {
        const WeylElem wt = group.multiply(w, t);
        const int drop = group.length(w) - group.length(wt);
        if (drop > 0) extended_[base + w.id] = wt.id;
        if (drop == 1) bruhat_[base + w.id] = wt.id;
      }
    }
  }
}

std::uint32_t FKContext::target(FKGenerator g, WeylElem w, FKMode mode) const {
  if (g.i < 1 || g.j > n_ || g.i >= g.j) throw InvalidInput("generator index out of range");
  const std::size_t idx = ((g.i - 1) * n_ + (g.j - 1)) * group_.size() + w.id;
  return mode == FKMode::bruhat ? bruhat_[idx] : extended_[idx];
}

GroupVector FKContext::act(const GroupVector& xi, FKGenerator g, FKMode mode) const {
  GroupVector out;
  for (const auto& [w, c] : xi.terms()) {
    const std::uint32_t t = target(g, w, mode);
    if (t != kNone) out.add(WeylElem{t}, g.sign * c);
  }
  return out;
}

GroupVector FKContext::dunkl(const GroupVector& xi, int i, FKMode mode) const {
  if (i < 1 || i > n_) throw InvalidInput("Dunkl index out of range");
  GroupVector out;
  for (int j = 1; j <= n_; ++j) {
    if (j != i) out += act(xi, FKGenerator::make(i, j), mode);
  }
  return out;
}

GroupVector FKContext::dunkl_sequence(GroupVector xi, std::span<const int> thetas, FKMode mode) const {
  for (int i : thetas) {
    if (xi.is_zero()) break;
    xi = dunkl(xi, i, mode);
  }
  return xi;
}

GroupVector FKContext::schubert_act(WeylElem w, WeylElem v, FKMode mode) const {
  const Polynomial& poly = schubert_poly(group_.permutation(v));
  const GroupVector start = GroupVector::basis(w);
  GroupVector out;
  for (const auto& [mono, coeff] : poly.terms()) {
    if (coeff.get_den() != 1 || !coeff.get_num().fits_slong_p()) {
      throw Error("Schubert polynomial coefficient is not a machine integer");
    }
    std::vector<int> thetas;
    for (int var = 0; var < n_; ++var) thetas.insert(thetas.end(), mono.exponent(var), var + 1);
    GroupVector piece = dunkl_sequence(start, thetas, mode);
    piece *= coeff.get_num().get_si();
    out += piece;
  }
  return out;
}

long FKContext::f_coeff(WeylElem w, WeylElem v, WeylElem u) const {
  return schubert_act(w, v, FKMode::extended).coefficient(u);
}

GroupVector bruhat_act(const FKContext& ctx, const GroupVector& xi, FKGenerator g) {
  return ctx.act(xi, g, FKMode::bruhat);
}

GroupVector extended_act(const FKContext& ctx, const GroupVector& xi, FKGenerator g) {
  return ctx.act(xi, g, FKMode::extended);
}

GroupVector dunkl_act(const FKContext& ctx, const GroupVector& xi, int i, FKMode mode) {
  return ctx.dunkl(xi, i, mode);
}

long psi(const GroupVector& xi) {
  long total = 0;
  for (const auto& [w, c] : xi.terms()) total += c;
  return total;
}

}  // namespace csmkit
