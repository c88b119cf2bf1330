#pragma once

// Polynomials in the simple roots a1..ar (the symmetric algebra S of the root
// lattice) with the Weyl group action and the operators built from it.

#include "csmkit/cartan.hpp"
#include "csmkit/polynomial.hpp"
#include "json.hpp"

namespace csmkit {

using RootPoly = Polynomial;

RootPoly root_poly(const Root& r);
RootPoly simple_root_poly(int rank, int i);
RootPoly constant_poly(int rank, const Rational& c);

// Substitution data for s_i acting on S.
std::vector<LinearForm> simple_reflection_images(const CartanData& cartan, int i);

RootPoly simple_reflect_poly(const CartanData& cartan, int i, const RootPoly& f);
RootPoly weyl_act_poly(const WeylGroup& group, WeylElem w, const RootPoly& f);

// D_i(f) = (s_i(f) - f) / alpha_i, the constant term of x_i f in the nil-Hecke
// algebra. Throws InexactDivision on a remainder.
RootPoly twisted_derivative(const CartanData& cartan, int i, const RootPoly& f);

// x_i f = s_i(f) x_i + D_i(f): the one commutation rule every algebra in the
// engine reduces to.
struct GeneratorCommutation {
  RootPoly reflected;  // s_i(f)
  RootPoly constant;   // D_i(f)
};
GeneratorCommutation commute_past_generator(const CartanData& cartan, int i, const RootPoly& f);

// d_i(f) = (f - s_i(f)) / alpha_i = -D_i(f).
RootPoly divided_difference_poly(const CartanData& cartan, int i, const RootPoly& f);

// Image under the map sending every simple root to 0.
Rational specialize_zero(const RootPoly& f);

std::string to_text(const RootPoly& f);

// [{"exp": [...], "num": n, "den": d}, ...] in graded-lex order.
nlohmann::ordered_json to_json(const RootPoly& f);
RootPoly root_poly_from_json(const nlohmann::json& doc, int rank);

nlohmann::ordered_json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& doc);

}  // namespace csmkit
