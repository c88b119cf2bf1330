#pragma once

// Schubert polynomials in x1..xn by divided differences from the staircase
// monomial x1^{n-1} x2^{n-2} ... x_{n-1}.

#include <span>
#include <string>
#include <vector>

#include "csmkit/polynomial.hpp"

namespace csmkit {

constexpr int kMaxSchubertDegree = 12;

// d_k f = (f - f|x_k<->x_{k+1}) / (x_k - x_{k+1}), variables 1-based.
Polynomial x_divided_difference(const Polynomial& f, int k);

// S_w for a one-line permutation w of {1..n}, n = perm.size(), as a
// polynomial in n variables. Memoized; safe to call concurrently.
const Polynomial& schubert_poly(std::span<const int> perm);

// "x1^2*x2"
std::string schubert_to_text(const Polynomial& f);

}  // namespace csmkit
