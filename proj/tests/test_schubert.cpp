#include "doctest.h"

#include "csmkit/cartan.hpp"
#include "csmkit/error.hpp"
#include "csmkit/schubert.hpp"
#include "support.hpp"

using namespace csmkit;
using testing::Perm;
using testing::poly;

TEST_CASE("Schubert polynomials of S_3") {
  CHECK(schubert_poly(Perm{3, 2, 1}) == poly(3, {{{2, 1, 0}, 1}}));
  CHECK(schubert_to_text(schubert_poly(Perm{3, 2, 1})) == "x1^2*x2");
  CHECK(schubert_poly(Perm{2, 1, 3}) == poly(3, {{{1, 0, 0}, 1}}));
  CHECK(schubert_poly(Perm{1, 3, 2}) == poly(3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}}));
  CHECK(schubert_poly(Perm{2, 3, 1}) == poly(3, {{{1, 1, 0}, 1}}));
  CHECK(schubert_poly(Perm{3, 1, 2}) == poly(3, {{{2, 0, 0}, 1}}));
  CHECK(schubert_poly(Perm{1, 2, 3}) == poly(3, {{{0, 0, 0}, 1}}));
  CHECK(schubert_to_text(schubert_poly(Perm{1, 3, 2})) == "x1 + x2");
}

TEST_CASE("divided differences step down the weak order") {
  const WeylGroup s4(cartan_from_label("A3"));
  for (WeylElem w : s4.elements()) {
    const Perm& p = s4.permutation(w);
    const Polynomial& sw = schubert_poly(p);
    CHECK(sw.degree() == s4.length(w));
    CHECK(sw.is_homogeneous());
    CHECK(sw.has_integer_coefficients());
    CHECK(sw.has_nonnegative_coefficients());
    for (int k = 1; k <= 3; ++k) {
      const WeylElem ws = s4.right_mul(w, k);
      const Polynomial d = x_divided_difference(sw, k);
      if (s4.length(ws) < s4.length(w)) {
        CHECK(d == schubert_poly(s4.permutation(ws)));
      } else {
        CHECK(d.is_zero());
      }
    }
  }
}

TEST_CASE("stability under S_n into S_{n+1}") {
  for (int n = 2; n <= 4; ++n) {
    for (const Perm& p : testing::all_perms(n)) {
      Perm extended = p;
      extended.push_back(n + 1);
      const Polynomial& small = schubert_poly(p);
      const Polynomial& big = schubert_poly(extended);
      CHECK(big.nvars() == n + 1);
      // Same monomials once the extra variable is appended.
      Polynomial lifted(n + 1);
      for (const auto& [m, c] : small.terms()) {
        std::vector<int> e = m.exponents(n);
        e.push_back(0);
        lifted.add_term(Monomial::from_exponents(e), c);
      }
      CHECK(big == lifted);
    }
  }
}

TEST_CASE("Schubert input validation") {
  CHECK_THROWS_AS(schubert_poly(Perm{1, 1}), InvalidInput);
  CHECK_THROWS_AS(schubert_poly(Perm{0, 1}), InvalidInput);
  CHECK_THROWS_AS(x_divided_difference(poly(3, {{{1, 0, 0}, 1}}), 3), InvalidInput);
}
