#include <doctest.h>

#include <cmath>
#include <initializer_list>

#include "pickaudit/errors.hpp"
#include "pickaudit/normal.hpp"
#include "pickaudit/student_t.hpp"
#include "support/oracles.hpp"

using namespace pickaudit;
using namespace pickaudit::test;

TEST_CASE("t survival: symmetry anchors and the Cauchy closed form") {
  for (int dof : {1, 2, 7, 30}) CHECK(t_survival(0.0, dof) == doctest::Approx(0.5).epsilon(1e-14));
  // dof = 1 is Cauchy: survival(1) = 1/2 - atan(1)/pi = 1/4
  CHECK(t_survival(1.0, 1) == doctest::Approx(0.25).epsilon(1e-13));
  // frozen from the quadrature oracle
  CHECK(t_survival(2.0, 10) == doctest::Approx(0.036694017385370183).epsilon(1e-12));
  CHECK_THROWS_AS(t_survival(1.0, 0), DomainError);
  CHECK_THROWS_AS(t_survival(std::nan(""), 3), DomainError);
}

TEST_CASE("t survival is decreasing in x and matches the quadrature oracle") {
  for (int dof : {1, 2, 5, 30, 100}) {
    CAPTURE(dof);
    double prev = 1.0;
    for (double x = -6.0; x <= 6.01; x += 0.75) {
      const double s = t_survival(x, dof);
      CHECK(s < prev);
      prev = s;
      const long double ref = oracle_t_survival(x, dof);
      CHECK(std::fabs(s - static_cast<double>(ref)) <= 1e-13 + 1e-12 * static_cast<double>(ref));
    }
  }
}

TEST_CASE("t survival approaches the normal survival for large dof") {
  for (double x : {0.5, 1.0, 2.0}) {
    const double diff_small = std::fabs(t_survival(x, 30) - normal_survival(x));
    const double diff_large = std::fabs(t_survival(x, 5000) - normal_survival(x));
    CHECK(diff_large < diff_small);
    CHECK(diff_large < 5e-5);
  }
}

TEST_CASE("t inverse survival: anchors, round trip, and errors") {
  CHECK(t_inv_survival(0.5, 7) == 0.0);
  CHECK(t_inv_survival(0.25, 1) == doctest::Approx(1.0).epsilon(1e-11));
  // frozen from the oracle bisection
  CHECK(t_inv_survival(0.05, 9) == doctest::Approx(1.8331129326562372).epsilon(1e-10));
  CHECK_THROWS_AS(t_inv_survival(0.0, 3), DomainError);
  CHECK_THROWS_AS(t_inv_survival(1.0, 3), DomainError);
  CHECK_THROWS_AS(t_inv_survival(0.5, 0), DomainError);

  for (int dof : {1, 2, 5, 30, 100}) {
    CAPTURE(dof);
    const double lo = 1e-10;
    for (int i = 0; i < 40; ++i) {
      const double p = lo * std::exp(std::log(0.5 / lo) / 39.0 * i);
      for (double q : {p, 1.0 - p}) {
        CHECK(std::fabs(t_survival(t_inv_survival(q, dof), dof) - q) <= 1e-10);
      }
    }
  }
}

TEST_CASE("regularized incomplete beta: closed-form spot checks") {
  CHECK(regularized_incomplete_beta(0.0, 2.0, 3.0) == 0.0);
  CHECK(regularized_incomplete_beta(1.0, 2.0, 3.0) == 1.0);
  // I_x(1, b) = 1 - (1-x)^b
  CHECK(regularized_incomplete_beta(0.3, 1.0, 4.0) ==
        doctest::Approx(1.0 - std::pow(0.7, 4)).epsilon(1e-13));
  // I_x(a, 1) = x^a
  CHECK(regularized_incomplete_beta(0.6, 3.0, 1.0) ==
        doctest::Approx(std::pow(0.6, 3)).epsilon(1e-13));
  CHECK_THROWS_AS(regularized_incomplete_beta(0.5, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(regularized_incomplete_beta(1.5, 1.0, 1.0), DomainError);
}
