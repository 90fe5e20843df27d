#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mtz/constants.hpp>

#include <string>
#include <thread>
#include <vector>

using namespace mtz;
using namespace mtz::constants;

namespace {

bool rel_close(const BigFloat& a, const BigFloat& b, int tol_exp) {
  return (a - b).abs() <= b.abs() * BigFloat::pow10(tol_exp, b.precision_digits());
}

}  // namespace

TEST_CASE("zeta at small even arguments matches pi powers") {
  BigFloat pi = pi_const(30);
  CHECK(rel_close(zeta_int(2, 30), pi * pi / BigFloat(6L, 30), -25));
  CHECK(rel_close(zeta_int(4, 30), BigFloat::pow_int(pi, 4) / BigFloat(90L, 30), -25));
  // zeta(2k) = pi^{2k} / d for the classical denominators
  const long denominators[] = {6, 90, 945, 9450, 93555};
  for (int k = 1; k <= 5; ++k)
    CHECK(rel_close(zeta_int(2 * k, 30),
                    BigFloat::pow_int(pi, 2 * k) / BigFloat(denominators[k - 1], 30), -25));
}

TEST_CASE("decimal expansions") {
  CHECK(zeta_int(2, 30).to_string(21) == "1.64493406684822643647");
  CHECK(zeta_int(3, 30).to_string(20) == "1.2020569031595942854");
  CHECK(zeta_int(4, 30).to_string(21) == "1.08232323371113819152");
  CHECK(pi_const(15).to_string(15) == "3.14159265358979");
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(zeta_int(1, 30), std::domain_error);
  CHECK_THROWS_AS(zeta_int(0, 30), std::domain_error);
  CHECK_THROWS_AS(zeta_int(-3, 30), std::domain_error);
  CHECK_THROWS_AS(eta_int(1, 30), std::domain_error);
  CHECK_THROWS_AS(gamma_int(0), std::domain_error);
}

TEST_CASE("eta values and the eta/zeta relation") {
  BigFloat pi = pi_const(30);
  CHECK(rel_close(eta_int(2, 30), pi * pi / BigFloat(12L, 30), -25));
  CHECK(rel_close(eta_int(3, 30), zeta_int(3, 30) * BigFloat(Rational(3, 4), 30), -25));
  CHECK(eta_int(3, 30).to_string(9) == "0.901542677");

  // 2^k eta(k) = (2^k - 2) zeta(k)
  for (int k = 2; k <= 20; ++k) {
    BigFloat lhs = BigFloat(pow2(static_cast<unsigned long>(k)), 50) * eta_int(k, 50);
    BigFloat rhs = BigFloat(pow2_minus_2(static_cast<unsigned long>(k)), 50) * zeta_int(k, 50);
    CHECK(rel_close(lhs, rhs, -45));
  }
}

TEST_CASE("increasing precision preserves leading digits") {
  std::string lo = zeta_int(3, 30).to_string(25);
  std::string hi = zeta_int(3, 60).to_string(25);
  CHECK(lo == hi);
  std::string plo = pi_const(30).to_string(25);
  std::string phi = pi_const(80).to_string(25);
  CHECK(plo == phi);
}

TEST_CASE("agreement with mpfr's own zeta") {
  for (int k : {2, 3, 5, 7, 11, 19}) {
    BigFloat ours = zeta_int(k, 40);
    BigFloat theirs(40);
    mpfr_zeta_ui(theirs.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
    CHECK(rel_close(ours, theirs, -35));
  }
}

TEST_CASE("memoized values are bit-identical across calls") {
  BigFloat a = zeta_int(7, 35);
  BigFloat b = zeta_int(7, 35);
  CHECK(a == b);
  CHECK(mpfr_cmp(a.raw(), b.raw()) == 0);
}

TEST_CASE("concurrent lookups agree with the sequential result") {
  BigFloat reference = zeta_int(13, 45);
  std::vector<BigFloat> results(6, BigFloat(0L, 45));
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < results.size(); ++i)
    pool.emplace_back([i, &results] { results[i] = zeta_int(13, 45) + eta_int(9, 45); });
  for (auto& t : pool) t.join();
  BigFloat expected = reference + eta_int(9, 45);
  for (const auto& r : results) CHECK(mpfr_cmp(r.raw(), expected.raw()) == 0);
}

TEST_CASE("integer gamma") {
  CHECK(gamma_int(1) == 1);
  CHECK(gamma_int(2) == 1);
  CHECK(gamma_int(5) == 24);
  CHECK(gamma_int(21) == factorial(20));
}
