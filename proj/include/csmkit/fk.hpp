#pragma once

// Type A only. The Bruhat and extended Bruhat actions of the Fomin-Kirillov
// generators [ij] on ZS_n, Dunkl elements, and Schubert polynomials evaluated
// at Dunkl elements.
//
//   w . [ij] = w t_ij  if l(w t_ij) = l(w) - 1   (bruhat)
//   w * [ij] = w t_ij  if l(w t_ij) < l(w)       (extended)

#include <map>
#include <span>
#include <vector>

#include "csmkit/cartan.hpp"

namespace csmkit {

class GroupVector {
 public:
  using TermMap = std::map<WeylElem, long>;

  static GroupVector basis(WeylElem w);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long coefficient(WeylElem w) const;

  void add(WeylElem w, long c);
  GroupVector& operator+=(const GroupVector& other);
  GroupVector& operator-=(const GroupVector& other);
  GroupVector& operator*=(long c);

  friend bool operator==(const GroupVector&, const GroupVector&) = default;

 private:
  TermMap terms_;
};

// [ij] with i < j after normalization; [ji] is stored as -[ij].
struct FKGenerator {
  int i = 1;
  int j = 2;
  int sign = 1;

  static FKGenerator make(int a, int b);
  friend bool operator==(const FKGenerator&, const FKGenerator&) = default;
};

enum class FKMode { bruhat, extended };

class FKContext {
 public:
  // Throws InvalidInput unless the group is of type A.
  explicit FKContext(const WeylGroup& group);

  const WeylGroup& group() const { return group_; }
  int degree() const { return n_; }

  GroupVector act(const GroupVector& xi, FKGenerator g, FKMode mode) const;
  // theta_i = sum_{j != i} [ij]
  GroupVector dunkl(const GroupVector& xi, int i, FKMode mode) const;
  // Applies theta_{thetas[0]}, then theta_{thetas[1]}, ...
  GroupVector dunkl_sequence(GroupVector xi, std::span<const int> thetas, FKMode mode) const;
  // w acted on by S_v(theta_1, ..., theta_n), each monomial expanded x1-block first.
  GroupVector schubert_act(WeylElem w, WeylElem v, FKMode mode) const;
  // Coefficient of u in w * S_v(theta).
  long f_coeff(WeylElem w, WeylElem v, WeylElem u) const;

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;
  std::uint32_t target(FKGenerator g, WeylElem w, FKMode mode) const;

  const WeylGroup& group_;
  int n_;
  // (pair, w) -> w t_ij or kNone, one table per mode.
  std::vector<std::uint32_t> bruhat_;
  std::vector<std::uint32_t> extended_;
};

GroupVector bruhat_act(const FKContext& ctx, const GroupVector& xi, FKGenerator g);
GroupVector extended_act(const FKContext& ctx, const GroupVector& xi, FKGenerator g);
GroupVector dunkl_act(const FKContext& ctx, const GroupVector& xi, int i, FKMode mode);

// Augmentation w -> 1.
long psi(const GroupVector& xi);

}  // namespace csmkit
