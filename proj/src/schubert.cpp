#include "csmkit/schubert.hpp"

#include <map>
#include <mutex>

#include "csmkit/error.hpp"

namespace csmkit {

namespace {

using Perm = std::vector<int>;

void check_permutation(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  if (n < 1 || n > kMaxSchubertDegree) throw InvalidInput("permutation size out of range");
  std::vector<bool> seen(n + 1, false);
  for (int value : perm) {
    if (value < 1 || value > n || seen[value]) throw InvalidInput("not a permutation");
    seen[value] = true;
  }
}

// Node-based map: references handed out stay valid across inserts.
std::mutex memo_mutex;
std::map<Perm, Polynomial> memo;

Polynomial staircase(int n) {
  std::vector<int> exps(n, 0);
  for (int k = 0; k < n; ++k) exps[k] = n - 1 - k;
  Polynomial out(n);
  out.add_term(Monomial::from_exponents(exps), 1);
  return out;
}

Polynomial compute(const Perm& w) {
  const int n = static_cast<int>(w.size());
  for (int k = 1; k < n; ++k) {
    if (w[k - 1] < w[k]) {
      // S_w = d_k S_{w s_k} for an ascent k.
      Perm up = w;
      std::swap(up[k - 1], up[k]);
      return x_divided_difference(schubert_poly(up), k);
    }
  }
  return staircase(n);  // no ascent: w is the longest element
}

}  // namespace

Polynomial x_divided_difference(const Polynomial& f, int k) {
  const int n = f.nvars();
  if (k < 1 || k >= n) throw InvalidInput("divided difference index out of range");
  std::vector<LinearForm> swap(n, LinearForm(n, 0));
  for (int j = 0; j < n; ++j) swap[j][j] = 1;
  swap[k - 1] = LinearForm(n, 0);
  swap[k] = LinearForm(n, 0);
  swap[k - 1][k] = 1;
  swap[k][k - 1] = 1;
  LinearForm divisor(n, 0);
  divisor[k - 1] = 1;
  divisor[k] = -1;
  return divided_difference(f, swap, divisor);
}

const Polynomial& schubert_poly(std::span<const int> perm) {
  check_permutation(perm);
  Perm key(perm.begin(), perm.end());
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  // Computed outside the lock; concurrent duplicates agree, first insert wins.
  Polynomial value = compute(key);
  std::lock_guard lock(memo_mutex);
  return memo.try_emplace(std::move(key), std::move(value)).first->second;
}

std::string schubert_to_text(const Polynomial& f) { return f.to_string("x"); }

}  // namespace csmkit
