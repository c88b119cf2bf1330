#pragma once

// Helpers shared by the unit tests: literal polynomials and brute-force
// permutation oracles that do not go through WeylGroup.

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "csmkit/cartan.hpp"
#include "csmkit/rootpoly.hpp"

namespace testing {

using csmkit::Rational;
using csmkit::RootPoly;

struct Term {
  std::vector<int> exps;
  long coeff;
};

inline RootPoly poly(int nvars, std::initializer_list<Term> terms) {
  RootPoly out(nvars);
  for (const Term& t : terms) {
    std::vector<int> exps = t.exps;
    exps.resize(nvars, 0);
    out.add_term(csmkit::Monomial::from_exponents(exps), t.coeff);
  }
  return out;
}

inline RootPoly alpha(int rank, int i) { return csmkit::simple_root_poly(rank, i); }
inline RootPoly constant(int rank, long c) { return csmkit::constant_poly(rank, c); }

using Perm = std::vector<int>;

inline int inversions(const Perm& w) {
  int count = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    for (std::size_t l = k + 1; l < w.size(); ++l) count += w[k] > w[l];
  }
  return count;
}

// (uv)(k) = u(v(k))
inline Perm compose(const Perm& u, const Perm& v) {
  Perm out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = u[v[k] - 1];
  return out;
}

inline Perm identity_perm(int n) {
  Perm out(n);
  std::iota(out.begin(), out.end(), 1);
  return out;
}

inline Perm transposition_perm(int n, int i, int j) {
  Perm out = identity_perm(n);
  std::swap(out[i - 1], out[j - 1]);
  return out;
}

inline Perm word_perm(int n, const std::vector<int>& word) {
  Perm out = identity_perm(n);
  for (int i : word) out = compose(out, transposition_perm(n, i, i + 1));
  return out;
}

inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Tableau criterion: v <= w iff for every k the sorted prefixes of v are
// entrywise below those of w.
inline bool bruhat_tableau(const Perm& v, const Perm& w) {
  for (std::size_t k = 1; k <= v.size(); ++k) {
    Perm a(v.begin(), v.begin() + k);
    Perm b(w.begin(), w.begin() + k);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < k; ++i) {
      if (a[i] > b[i]) return false;
    }
  }
  return true;
}

}  // namespace testing
