#include "csmkit/rootpoly.hpp"

#include <algorithm>

#include "csmkit/error.hpp"

namespace csmkit {

RootPoly root_poly(const Root& r) {
  const int rank = static_cast<int>(r.coords.size());
  return Polynomial::linear(rank, LinearForm(r.coords.begin(), r.coords.end()));
}

RootPoly simple_root_poly(int rank, int i) {
  if (i < 1 || i > rank) throw InvalidInput("simple root index out of range");
  return Polynomial::variable(rank, i - 1);
}

RootPoly constant_poly(int rank, const Rational& c) { return Polynomial::constant(rank, c); }

std::vector<LinearForm> simple_reflection_images(const CartanData& cartan, int i) {
  const int r = cartan.rank;
  if (i < 1 || i > r) throw InvalidInput("simple reflection index out of range");
  std::vector<LinearForm> images(r, LinearForm(r, 0));
  for (int j = 1; j <= r; ++j) {
    images[j - 1][j - 1] = 1;
    images[j - 1][i - 1] -= cartan.a(i, j);
  }
  return images;
}

RootPoly simple_reflect_poly(const CartanData& cartan, int i, const RootPoly& f) {
  return f.substitute(simple_reflection_images(cartan, i));
}

RootPoly weyl_act_poly(const WeylGroup& group, WeylElem w, const RootPoly& f) {
  std::vector<LinearForm> images;
  for (const auto& col : group.root_matrix(w)) images.emplace_back(col.begin(), col.end());
  return f.substitute(images);
}

RootPoly twisted_derivative(const CartanData& cartan, int i, const RootPoly& f) {
  return -divided_difference_poly(cartan, i, f);
}

RootPoly divided_difference_poly(const CartanData& cartan, int i, const RootPoly& f) {
  auto images = simple_reflection_images(cartan, i);
  LinearForm divisor(cartan.rank, 0);
  divisor[i - 1] = 1;
  return divided_difference(f, images, divisor);
}

GeneratorCommutation commute_past_generator(const CartanData& cartan, int i, const RootPoly& f) {
  if (f.nvars() != cartan.rank) throw InvalidInput("polynomial rank does not match Cartan rank");
  if (i < 1 || i > cartan.rank) throw InvalidInput("simple reflection index out of range");
  if (f.is_constant()) return {f, RootPoly(cartan.rank)};
  RootPoly reflected = simple_reflect_poly(cartan, i, f);
  LinearForm divisor(cartan.rank, 0);
  divisor[i - 1] = 1;
  RootPoly constant = (reflected - f).divide_exact(divisor);
  return {std::move(reflected), std::move(constant)};
}

Rational specialize_zero(const RootPoly& f) { return f.constant_term(); }

std::string to_text(const RootPoly& f) { return f.to_string("a"); }

namespace {

nlohmann::ordered_json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const nlohmann::json& doc) {
  if (doc.is_number_integer()) return mpz_class(std::to_string(doc.get<long long>()));
  if (doc.is_string()) {
    mpz_class z;
    if (z.set_str(doc.get<std::string>(), 10) != 0) throw InvalidInput("bad integer string");
    return z;
  }
  throw InvalidInput("expected an integer");
}

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InvalidInput("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

nlohmann::ordered_json rational_to_json(const Rational& q) {
  if (q.get_den() == 1) return integer_to_json(q.get_num());
  nlohmann::ordered_json out;
  out["num"] = integer_to_json(q.get_num());
  out["den"] = integer_to_json(q.get_den());
  return out;
}

Rational rational_from_json(const nlohmann::json& doc) {
  if (doc.is_object()) return make_rational(integer_from_json(doc.at("num")), integer_from_json(doc.at("den")));
  return Rational(integer_from_json(doc));
}

nlohmann::ordered_json to_json(const RootPoly& f) {
  std::vector<std::pair<Monomial, Rational>> sorted(f.terms().begin(), f.terms().end());
  std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
    return graded_lex_less(a.first, b.first, f.nvars());
  });
  auto out = nlohmann::ordered_json::array();
  for (const auto& [m, c] : sorted) {
    nlohmann::ordered_json term;
    term["exp"] = m.exponents(f.nvars());
    term["num"] = integer_to_json(c.get_num());
    term["den"] = integer_to_json(c.get_den());
    out.push_back(std::move(term));
  }
  return out;
}

RootPoly root_poly_from_json(const nlohmann::json& doc, int rank) {
  if (!doc.is_array()) throw InvalidInput("polynomial JSON must be an array of terms");
  RootPoly f(rank);
  for (const auto& term : doc) {
    const auto exps = term.at("exp").get<std::vector<int>>();
    if (exps.size() != static_cast<std::size_t>(rank)) {
      throw InvalidInput("exponent vector length does not match rank");
    }
    const Rational q = make_rational(integer_from_json(term.at("num")), integer_from_json(term.at("den")));
    f.add_term(Monomial::from_exponents(exps), q);
  }
  return f;
}

}  // namespace csmkit
