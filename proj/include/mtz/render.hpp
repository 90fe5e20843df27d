#pragma once

// Rendering and parsing of polynomials and inversion identities.
//
// Text:  12*z(2)^2 + 84*z(4)          (expanded, canonical term order)
// LaTeX: 12 \Big( \zeta(2)^2 + 7 \zeta(4) \Big)   (common factor pulled out)
// JSON:  terms as {"monomial":[...],"num":"...","den":"..."}; numerator and
//        denominator travel as strings so consumers never overflow.

#include <mtz/inversion.hpp>
#include <mtz/rational.hpp>
#include <mtz/zeta_algebra.hpp>

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace mtz::io {

using nlohmann::json;

namespace detail {

// z(2)^3*z(5) style monomial, args ascending.
inline std::string monomial_text(const ZetaMonomial& m, const std::string& sym) {
  std::string out;
  const auto& args = m.args();
  for (std::size_t i = 0; i < args.size();) {
    std::size_t j = i;
    while (j < args.size() && args[j] == args[i]) ++j;
    if (!out.empty()) out += "*";
    out += sym + "(" + std::to_string(args[i]) + ")";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

// \zeta(2)^3 \zeta(5) style monomial.
inline std::string monomial_latex(const ZetaMonomial& m, const std::string& sym,
                                  bool subscript_index) {
  std::string out;
  const auto& args = m.args();
  for (std::size_t i = 0; i < args.size();) {
    std::size_t j = i;
    while (j < args.size() && args[j] == args[i]) ++j;
    if (!out.empty()) out += " ";
    if (subscript_index)
      out += sym + "_{" + std::to_string(args[i]) + "}";
    else
      out += sym + "(" + std::to_string(args[i]) + ")";
    if (j - i > 1) {
      std::string e = std::to_string(j - i);
      out += e.size() == 1 ? "^" + e : "^{" + e + "}";
    }
    i = j;
  }
  return out;
}

inline std::string coeff_latex(const Rational& c) {
  if (c.is_integer()) return c.num().get_str();
  return "\\tfrac{" + c.num().get_str() + "}{" + c.den().get_str() + "}";
}

// Shared sum renderer over (monomial, coefficient) pairs.
template <typename Range, typename MonomialFn>
std::string render_sum_text(const Range& terms, MonomialFn&& mono) {
  std::string out;
  for (const auto& [m, c] : terms) {
    Rational a = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    std::string ms = mono(m);
    if (ms.empty()) {
      out += a.to_string();
    } else if (a == Rational(1)) {
      out += ms;
    } else {
      out += a.to_string() + "*" + ms;
    }
  }
  return out;
}

}  // namespace detail

inline std::string poly_to_text(const ZetaPolynomial& p, const std::string& sym = "z") {
  if (p.is_zero()) return "0";
  return detail::render_sum_text(p.terms(),
                                 [&](const ZetaMonomial& m) { return detail::monomial_text(m, sym); });
}

// Factored layout: the common rational factor of all coefficients is pulled
// out front, mirroring how the explicit tables are typeset.
inline std::string poly_to_latex(const ZetaPolynomial& p, const std::string& sym = "\\zeta") {
  if (p.is_zero()) return "0";
  Rational content = polynomial_content(p);
  if (p.terms().begin()->second.sign() < 0) content = -content;

  std::string inner;
  for (const auto& [m, c] : p.terms()) {
    Rational reduced = c / content;
    if (inner.empty()) {
      if (reduced.sign() < 0) inner += "-";
    } else {
      inner += reduced.sign() < 0 ? " - " : " + ";
    }
    Rational a = reduced.abs();
    std::string ms = detail::monomial_latex(m, sym, false);
    if (ms.empty())
      inner += detail::coeff_latex(a);
    else if (a == Rational(1))
      inner += ms;
    else
      inner += detail::coeff_latex(a) + " " + ms;
  }

  if (p.term_count() == 1) {
    if (content == Rational(1)) return inner;
    return detail::coeff_latex(content) + " " + inner;
  }
  if (content == Rational(1)) return inner;
  return detail::coeff_latex(content) + " \\Big( " + inner + " \\Big)";
}

inline json poly_to_json(const ZetaPolynomial& p, const std::string& symbol = "zeta") {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json t;
    t["monomial"] = m.args();
    t["num"] = c.num().get_str();
    t["den"] = c.den().get_str();
    terms.push_back(std::move(t));
  }
  return json{{"symbol", symbol}, {"terms", std::move(terms)}};
}

inline ZetaPolynomial poly_from_json(const json& j) {
  ZetaPolynomial p;
  for (const auto& t : j.at("terms")) {
    std::vector<int> args = t.at("monomial").get<std::vector<int>>();
    Rational c(bigint_from_string(t.at("num").get<std::string>()),
               bigint_from_string(t.at("den").get<std::string>()));
    p.add_term(ZetaMonomial(std::move(args)), c);
  }
  return p;
}

// ---- inversion identities ------------------------------------------------

// "84*zeta(4) = zbar(4) - 3*zbar(2)^2"; rhs rendered largest product first.
inline std::string identity_to_text(const inversion::InversionIdentity& id) {
  std::vector<std::pair<ZetaMonomial, Rational>> terms(id.rhs.rbegin(), id.rhs.rend());
  std::string rhs = detail::render_sum_text(
      terms, [&](const ZetaMonomial& m) { return detail::monomial_text(m, "zbar"); });
  return id.scale.to_string() + "*zeta(" + std::to_string(id.n) + ") = " + rhs;
}

inline std::string identity_to_latex(const inversion::InversionIdentity& id) {
  std::string rhs;
  for (auto it = id.rhs.rbegin(); it != id.rhs.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c.abs();
    if (rhs.empty()) {
      if (c.sign() < 0) rhs += "-";
    } else {
      rhs += c.sign() < 0 ? " - " : " + ";
    }
    std::string ms = detail::monomial_latex(m, "\\overline{\\zeta}", true);
    if (a == Rational(1))
      rhs += ms;
    else
      rhs += detail::coeff_latex(a) + " " + ms;
  }
  return detail::coeff_latex(id.scale) + " \\zeta(" + std::to_string(id.n) + ") = " + rhs;
}

inline json identity_to_json(const inversion::InversionIdentity& id) {
  json rhs = json::array();
  for (auto it = id.rhs.rbegin(); it != id.rhs.rend(); ++it) {
    json t;
    t["monomial"] = it->first.args();
    t["num"] = it->second.num().get_str();
    t["den"] = it->second.den().get_str();
    rhs.push_back(std::move(t));
  }
  return json{{"n", id.n},
              {"scale", {{"num", id.scale.num().get_str()}, {"den", id.scale.den().get_str()}}},
              {"rhs", std::move(rhs)}};
}

inline inversion::InversionIdentity identity_from_json(const json& j) {
  inversion::InversionIdentity id;
  id.n = j.at("n").get<int>();
  id.scale = Rational(bigint_from_string(j.at("scale").at("num").get<std::string>()),
                      bigint_from_string(j.at("scale").at("den").get<std::string>()));
  for (const auto& t : j.at("rhs")) {
    std::vector<int> args = t.at("monomial").get<std::vector<int>>();
    Rational c(bigint_from_string(t.at("num").get<std::string>()),
               bigint_from_string(t.at("den").get<std::string>()));
    auto [it, inserted] = id.rhs.try_emplace(ZetaMonomial(std::move(args)), c);
    if (!inserted) it->second += c;
  }
  return id;
}

}  // namespace mtz::io
