#pragma once

// JSON forms of the library types. Rationals are "p/q" strings; floats are
// JSON numbers printed round-trip exact.

#include "hyperint/canonical.hpp"
#include "hyperint/moebius.hpp"
#include "hyperint/polynomial.hpp"
#include "hyperint/rational.hpp"
#include "hyperint/reduction.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace hyperint {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return to_string(r); }
inline Json to_json(double x) { return x; }

template <class T>
Json to_json(const std::vector<T>& v) {
  Json out = Json::array();
  for (const T& x : v) out.push_back(to_json(x));
  return out;
}

template <class T>
Json to_json(const Polynomial<T>& p) {
  Json out;
  out["var"] = p.var();
  out["coeffs"] = to_json(p.coeffs());
  return out;
}

template <class T>
Json to_json(const ProjPoint<T>& x) {
  if (x.is_infinite()) return "inf";
  return to_json(x.value());
}

template <class T>
Json to_json(const Homography<T>& h) {
  Json out;
  out["a"] = to_json(h.a());
  out["b"] = to_json(h.b());
  out["c"] = to_json(h.c());
  out["d"] = to_json(h.d());
  return out;
}

inline std::string basis_key(long index) { return index == -1 ? "I-1@p" : "I" + std::to_string(index); }

/// Elementary terms are listed once with the factor 2 included ("coeff")
/// and once without it ("coeff_over_2").
inline Json to_json(const ReductionResult& r) {
  Json out;
  out["degree"] = r.degree;
  out["p"] = to_json(r.pole);
  Json basis = Json::object();
  for (const auto& [index, c] : r.basic) basis[basis_key(index)] = to_json(c);
  out["basis"] = basis;
  Json elementary = Json::array();
  for (const auto& [e, c] : r.elementary.terms())
    elementary.push_back({{"exp", e}, {"coeff", to_json(c)}, {"coeff_over_2", to_json(Rational(c / 2))}});
  out["elementary"] = elementary;
  out["convention"] = "coeff-includes-factor-2";
  return out;
}

inline Json to_json(const BandColumn& col) {
  Json out = Json::object();
  for (const auto& [row, v] : col.entries) out[std::to_string(row)] = to_json(v);
  return out;
}

template <class T>
Json to_json(const CanonicalForm<T>& f) {
  Json out;
  out["roots"] = to_json(f.roots);
  out["leading"] = to_json(f.leading);
  out["k"] = to_json(f.k);
  out["C"] = to_json(f.C);
  out["epsilon"] = f.epsilon;
  out["prefactor_sq"] = to_json(f.prefactor_sq);
  out["prefactor"] = f.prefactor;
  out["m"] = f.m;
  out["homography"] = to_json(f.H);
  return out;
}

inline Json to_json(const EllipticTerm& t) {
  Json out;
  out["fn"] = t.fn;
  const bool legendre = t.fn == "F" || t.fn == "Pi";
  out[legendre ? "nu" : "t"] = t.arg;
  out[legendre ? "q" : "k"] = t.modulus;
  if (t.fn == "Pi" || t.fn == "P") out["h"] = t.characteristic;
  out["coeff"] = t.coeff;
  return out;
}

inline Json to_json(const EllipticCombination& c) {
  Json out;
  out["label"] = c.label;
  out["prefactor"] = c.prefactor;
  Json terms = Json::array();
  for (const EllipticTerm& t : c.terms) terms.push_back(to_json(t));
  out["terms"] = terms;
  out["radicand_sign"] = c.radicand_sign;
  out["value"] = c.value();
  return out;
}

template <class T>
Json to_json(const OrbitVariant<T>& v) {
  Json out;
  out["element"] = v.element.name();
  out["labels"] = to_json(v.labels);
  out["epsilon"] = v.epsilon;
  out["prefactor_sq"] = to_json(v.prefactor_sq);
  out["formula"] = to_json(v.formula);
  return out;
}

}  // namespace hyperint
