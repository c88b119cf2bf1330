#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// This is the single arithmetic kernel of the engine. Root polynomials (in
// simple roots a1..ar) and Schubert polynomials (in x1..xn) are both
// instances; they differ only in the linear substitution used for the
// reflection and in the linear form divided by in a divided difference.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace csmkit {

using Rational = mpq_class;

// Coefficients of a degree-one form over the ring variables.
using LinearForm = std::vector<long>;

// Exponent vector packed into 5-bit fields. Supports up to 12 variables with
// per-variable exponent at most 31; exceeding either throws.
class Monomial {
 public:
  static constexpr int kMaxVars = 12;
  static constexpr int kMaxExponent = 31;

  constexpr Monomial() = default;

  static Monomial from_exponents(std::span<const int> exponents);
  static Monomial variable(int var);

  int exponent(int var) const {
    return static_cast<int>((bits_ >> (kBits * var)) & kFieldMask);
  }
  int degree() const;
  std::vector<int> exponents(int nvars) const;

  Monomial with_exponent(int var, int e) const;
  Monomial operator*(Monomial other) const;

  std::uint64_t packed() const { return bits_; }
  friend constexpr auto operator<=>(Monomial, Monomial) = default;

 private:
  static constexpr int kBits = 5;
  static constexpr std::uint64_t kFieldMask = (1u << kBits) - 1;
  explicit constexpr Monomial(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

// True when a precedes b in graded-lexicographic order (lower degree first,
// then larger exponent of the first variable first).
bool graded_lex_less(Monomial a, Monomial b, int nvars);

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(int nvars);

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int var);
  static Polynomial linear(int nvars, const LinearForm& form);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;
  bool has_integer_coefficients() const;
  bool has_nonnegative_coefficients() const;

  Rational coefficient(Monomial m) const;
  Rational constant_term() const { return coefficient(Monomial{}); }
  Polynomial homogeneous_part(int degree) const;

  void add_term(Monomial m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // Ring endomorphism sending variable j to images[j].
  Polynomial substitute(const std::vector<LinearForm>& images) const;

  // Exact quotient by a nonzero linear form. Throws InexactDivision when the
  // form does not divide this polynomial.
  Polynomial divide_exact(const LinearForm& divisor) const;

  // Canonical text, e.g. "1 + 3*a1 + a1^2*a2", terms in graded-lex order.
  std::string to_string(std::string_view var_prefix) const;

 private:
  void check_compatible(const Polynomial& other) const;

  int nvars_ = 0;
  TermMap terms_;
};

// (f - s(f)) / divisor, where s is the substitution `reflection`.
Polynomial divided_difference(const Polynomial& f,
                              const std::vector<LinearForm>& reflection,
                              const LinearForm& divisor);

std::string rational_to_string(const Rational& q);

}  // namespace csmkit
