#pragma once

// Frozen reference data for the explicit zbar tables (n = 1..10) and the
// zeta-from-zbar inversion table, with all outer factors multiplied
// through. Tests compare computed objects against these exactly.

#include <mtz/inversion.hpp>
#include <mtz/rational.hpp>
#include <mtz/zeta_algebra.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace golden {

using mtz::Rational;
using mtz::ZetaMonomial;
using mtz::ZetaPolynomial;

using TermList = std::vector<std::pair<std::vector<int>, long>>;

inline ZetaPolynomial make_poly(const TermList& terms) {
  ZetaPolynomial p;
  for (const auto& [args, coeff] : terms) p.add_term(ZetaMonomial(args), Rational(coeff));
  return p;
}

inline const TermList& closed_form_terms(int n) {
  static const std::vector<TermList> tables = {
      /* n=1 */ {},
      /* n=2 */ {{{2}, 2}},
      /* n=3 */ {{{3}, 12}},
      /* n=4 */ {{{2, 2}, 12}, {{4}, 84}},
      /* n=5 */ {{{2, 3}, 240}, {{5}, 720}},
      /* n=6 */ {{{2, 2, 2}, 120}, {{3, 3}, 1440}, {{2, 4}, 2520}, {{6}, 7440}},
      /* n=7 */
      {{{2, 2, 3}, 5040}, {{3, 4}, 35280}, {{2, 5}, 30240}, {{7}, 90720}},
      /* n=8 */
      {{{2, 2, 2, 2}, 1680},
       {{2, 3, 3}, 80640},
       {{2, 2, 4}, 70560},
       {{4, 4}, 246960},
       {{3, 5}, 483840},
       {{2, 6}, 416640},
       {{8}, 1280160}},
      /* n=9 */
      {{{2, 2, 2, 3}, 120960},
       {{3, 3, 3}, 483840},
       {{2, 3, 4}, 2540160},
       {{2, 2, 5}, 1088640},
       {{4, 5}, 7620480},
       {{3, 6}, 7499520},
       {{2, 7}, 6531840},
       {{9}, 20563200}},
      /* n=10 */
      {{{2, 2, 2, 2, 2}, 30240},
       {{2, 2, 3, 3}, 3628800},
       {{2, 2, 2, 4}, 2116800},
       {{3, 3, 4}, 25401600},
       {{2, 4, 4}, 22226400},
       {{2, 3, 5}, 43545600},
       {{5, 5}, 65318400},
       {{2, 2, 6}, 18748800},
       {{4, 6}, 131241600},
       {{3, 7}, 130636800},
       {{2, 8}, 115214400},
       {{10}, 370863360}},
  };
  if (n < 1 || n > 10) throw std::out_of_range("closed_form_terms: n must be 1..10");
  return tables[static_cast<std::size_t>(n) - 1];
}

inline ZetaPolynomial closed_form_table(int n) { return make_poly(closed_form_terms(n)); }

// scale * zeta(n) = sum of (zbar-product, coefficient); zbar_n itself
// carries coefficient 1.
struct InversionRow {
  long scale;
  TermList rhs;
};

inline const InversionRow& inversion_row(int n) {
  static const std::vector<InversionRow> rows = {
      /* n=2 */ {2, {{{2}, 1}}},
      /* n=3 */ {12, {{{3}, 1}}},
      /* n=4 */ {84, {{{4}, 1}, {{2, 2}, -3}}},
      /* n=5 */ {720, {{{5}, 1}, {{2, 3}, -10}}},
      /* n=6 */ {7440, {{{6}, 1}, {{2, 4}, -15}, {{3, 3}, -10}, {{2, 2, 2}, 30}}},
      /* n=7 */ {90720, {{{7}, 1}, {{2, 5}, -21}, {{3, 4}, -35}, {{2, 2, 3}, 210}}},
      /* n=8 */
      {1280160,
       {{{8}, 1},
        {{2, 6}, -28},
        {{3, 5}, -56},
        {{4, 4}, -35},
        {{2, 2, 4}, 420},
        {{2, 3, 3}, 560},
        {{2, 2, 2, 2}, -630}}},
      /* n=9 */
      {20563200,
       {{{9}, 1},
        {{2, 7}, -36},
        {{3, 6}, -84},
        {{4, 5}, -126},
        {{2, 2, 5}, 756},
        {{3, 3, 3}, 560},
        {{2, 2, 2, 3}, -7560},
        {{2, 3, 4}, 2520}}},
      /* n=10 */
      {370863360,
       {{{10}, 1},
        {{2, 8}, -45},
        {{3, 7}, -120},
        {{4, 6}, -210},
        {{2, 2, 6}, 1260},
        {{5, 5}, -126},
        {{2, 4, 4}, 3150},
        {{3, 3, 4}, 4200},
        {{2, 2, 2, 4}, -18900},
        {{2, 2, 3, 3}, -37800},
        {{2, 2, 2, 2, 2}, 22680},
        {{2, 3, 5}, 5040}}},
  };
  if (n < 2 || n > 10) throw std::out_of_range("inversion_row: n must be 2..10");
  return rows[static_cast<std::size_t>(n) - 2];
}

inline mtz::inversion::InversionIdentity inversion_identity(int n) {
  const InversionRow& row = inversion_row(n);
  mtz::inversion::InversionIdentity id;
  id.n = n;
  id.scale = Rational(row.scale);
  for (const auto& [args, coeff] : row.rhs) id.rhs[ZetaMonomial(args)] = Rational(coeff);
  return id;
}

}  // namespace golden
