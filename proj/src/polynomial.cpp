#include "csmkit/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "csmkit/error.hpp"

namespace csmkit {

namespace {

// Bits where a carry out of one 5-bit field lands.
constexpr std::uint64_t carry_mask() {
  std::uint64_t mask = 0;
  for (int k = 1; k <= Monomial::kMaxVars; ++k) mask |= std::uint64_t{1} << (5 * k);
  return mask;
}

bool is_unit_form(const LinearForm& form, int var) {
  for (std::size_t j = 0; j < form.size(); ++j) {
    if (form[j] != (static_cast<int>(j) == var ? 1 : 0)) return false;
  }
  return true;
}

}  // namespace

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars)) {
    throw InvalidInput("monomial has more than 12 variables");
  }
  std::uint64_t bits = 0;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    const int e = exponents[j];
    if (e < 0 || e > kMaxExponent) throw InvalidInput("monomial exponent out of range");
    bits |= static_cast<std::uint64_t>(e) << (kBits * j);
  }
  return Monomial(bits);
}

Monomial Monomial::variable(int var) {
  if (var < 0 || var >= kMaxVars) throw InvalidInput("variable index out of range");
  return Monomial(std::uint64_t{1} << (kBits * var));
}

int Monomial::degree() const {
  int d = 0;
  for (int j = 0; j < kMaxVars; ++j) d += exponent(j);
  return d;
}

std::vector<int> Monomial::exponents(int nvars) const {
  std::vector<int> out(nvars);
  for (int j = 0; j < nvars; ++j) out[j] = exponent(j);
  return out;
}

Monomial Monomial::with_exponent(int var, int e) const {
  if (e < 0 || e > kMaxExponent) throw InvalidInput("monomial exponent out of range");
  const std::uint64_t cleared = bits_ & ~(kFieldMask << (kBits * var));
  return Monomial(cleared | (static_cast<std::uint64_t>(e) << (kBits * var)));
}

Monomial Monomial::operator*(Monomial other) const {
  const std::uint64_t sum = bits_ + other.bits_;
  if (((sum ^ bits_ ^ other.bits_) & carry_mask()) != 0) {
    throw InvalidInput("monomial exponent overflow (max 31 per variable)");
  }
  return Monomial(sum);
}

bool graded_lex_less(Monomial a, Monomial b, int nvars) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  for (int j = 0; j < nvars; ++j) {
    if (a.exponent(j) != b.exponent(j)) return a.exponent(j) > b.exponent(j);
  }
  return false;
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > Monomial::kMaxVars) {
    throw InvalidInput("polynomial ring supports at most 12 variables");
  }
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int var) {
  Polynomial p(nvars);
  if (var < 0 || var >= nvars) throw InvalidInput("variable index out of range");
  p.add_term(Monomial::variable(var), 1);
  return p;
}

Polynomial Polynomial::linear(int nvars, const LinearForm& form) {
  Polynomial p(nvars);
  if (form.size() != static_cast<std::size_t>(nvars)) {
    throw InvalidInput("linear form length does not match the number of variables");
  }
  for (int j = 0; j < nvars; ++j) {
    if (form[j] != 0) p.add_term(Monomial::variable(j), Rational(form[j]));
  }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.get_den() == 1; });
}

bool Polynomial::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return sgn(t.second) > 0; });
}

Rational Polynomial::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

void Polynomial::add_term(Monomial m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (nvars_ != other.nvars_) {
    throw InvalidInput("polynomials over different numbers of variables (rank mismatch)");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::substitute(const std::vector<LinearForm>& images) const {
  if (images.size() != static_cast<std::size_t>(nvars_)) {
    throw InvalidInput("substitution must give one image per variable");
  }
  std::vector<int> moved;
  for (int j = 0; j < nvars_; ++j) {
    if (!is_unit_form(images[j], j)) moved.push_back(j);
  }
  if (moved.empty()) return *this;

  // powers[k][e] = images[moved[k]]^e, grown on demand.
  std::vector<std::vector<Polynomial>> powers(moved.size());
  for (std::size_t k = 0; k < moved.size(); ++k) {
    powers[k].push_back(constant(nvars_, 1));
  }
  auto power = [&](std::size_t k, int e) -> const Polynomial& {
    while (static_cast<int>(powers[k].size()) <= e) {
      powers[k].push_back(powers[k].back() * linear(nvars_, images[moved[k]]));
    }
    return powers[k][e];
  };

  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial fixed = m;
    Polynomial image = constant(nvars_, c);
    for (std::size_t k = 0; k < moved.size(); ++k) {
      const int e = m.exponent(moved[k]);
      if (e == 0) continue;
      fixed = fixed.with_exponent(moved[k], 0);
      image = image * power(k, e);
    }
    for (const auto& [mi, ci] : image.terms_) out.add_term(mi * fixed, ci);
  }
  return out;
}

Polynomial Polynomial::divide_exact(const LinearForm& divisor) const {
  if (divisor.size() != static_cast<std::size_t>(nvars_)) {
    throw InvalidInput("divisor length does not match the number of variables");
  }
  int lead = -1;
  for (int j = 0; j < nvars_; ++j) {
    if (divisor[j] != 0) {
      lead = j;
      break;
    }
  }
  if (lead < 0) throw InvalidInput("division by the zero form");

  // Long division in (Q[other variables])[x_lead]; every step removes the
  // term of highest x_lead-degree and only adds terms of lower x_lead-degree.
  const Rational lead_coeff(divisor[lead]);
  Polynomial rem = *this;
  Polynomial quotient(nvars_);
  while (!rem.is_zero()) {
    auto top = rem.terms_.begin();
    for (auto it = rem.terms_.begin(); it != rem.terms_.end(); ++it) {
      if (it->first.exponent(lead) > top->first.exponent(lead)) top = it;
    }
    const int e = top->first.exponent(lead);
    if (e == 0) {
      throw InexactDivision("inexact division: remainder " + rem.to_string("v"));
    }
    const Monomial qm = top->first.with_exponent(lead, e - 1);
    const Rational qc = top->second / lead_coeff;
    quotient.add_term(qm, qc);
    for (int j = 0; j < nvars_; ++j) {
      if (divisor[j] != 0) rem.add_term(qm * Monomial::variable(j), -qc * divisor[j]);
    }
  }
  return quotient;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string Polynomial::to_string(std::string_view var_prefix) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [this](const auto& a, const auto& b) {
    return graded_lex_less(a.first, b.first, nvars_);
  });

  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    const bool is_one = mag == 1;
    if (m == Monomial{}) {
      os << rational_to_string(mag);
      continue;
    }
    if (!is_one) os << rational_to_string(mag) << '*';
    bool first_var = true;
    for (int j = 0; j < nvars_; ++j) {
      const int e = m.exponent(j);
      if (e == 0) continue;
      if (!first_var) os << '*';
      first_var = false;
      os << var_prefix << (j + 1);
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

Polynomial divided_difference(const Polynomial& f,
                              const std::vector<LinearForm>& reflection,
                              const LinearForm& divisor) {
  return (f - f.substitute(reflection)).divide_exact(divisor);
}

}  // namespace csmkit
