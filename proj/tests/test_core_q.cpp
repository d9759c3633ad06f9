#include "doctest.h"

#include <random>

#include "qkk/qparam.hpp"

using namespace qkk;

TEST_CASE("qparam validation") {
  CHECK_THROWS_AS(QParam(0.0), std::invalid_argument);
  CHECK_THROWS_AS(QParam(1.5), std::invalid_argument);
  CHECK_THROWS_AS(QParam(-1.0001), std::invalid_argument);
  QParam q(-0.3);
  CHECK(q.sign() == -1);
  CHECK(q.abs() == doctest::Approx(0.3));
  CHECK(q.sign() * q.abs() == q.value());
  CHECK(QParam(1.0).is_strict() == false);
  CHECK_THROWS(Deformation<double>(QParam(-1.0)));
}

TEST_CASE("qnumber examples") {
  QParam q(0.5);
  CHECK(qnumber(q, 0) == 0.0);
  CHECK(qnumber(q, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(qnumber(q, 3) == doctest::Approx(5.25).epsilon(1e-14));
  CHECK_THROWS(qnumber(QParam(1.0), 2));
}

TEST_CASE("qnumber antisymmetry and recursion") {
  for (double qv : {0.3, -0.3, 0.5, -0.5, 0.9, -0.9}) {
    QParam q(qv);
    const double two = qv + 1.0 / qv;
    for (int a = -50; a <= 50; ++a) {
      CHECK(qnumber(q, a) == -qnumber(q, -a));
      const double lhs = qnumber(q, a + 1);
      const double rhs = two * qnumber(q, a) - qnumber(q, a - 1);
      CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(lhs)));
    }
  }
}

TEST_CASE("m_scalar examples") {
  QParam q(0.5);
  CHECK(m_scalar(q, 1.0, 5) == doctest::Approx(1.0));
  CHECK(m_scalar(q, 0.0, 1) == 0.0);
  CHECK(m_scalar(q, 0.5, 2) == doctest::Approx(0.4516129032).epsilon(1e-9));
  CHECK(m_scalar(q, 1.0, 0) == 1.0);
  CHECK_THROWS(m_scalar(q, 0.5, 0));
  CHECK_THROWS(m_scalar(q, 1.5, 2));
  CHECK_THROWS(m_scalar(q, -0.1, 2));
}

TEST_CASE("m_scalar is one at t = 1 and increases to one in l") {
  for (double qv : {0.3, -0.3, 0.5, -0.5, 0.9, -0.9}) {
    QParam q(qv);
    for (int l = 1; l <= 100; ++l) CHECK(std::fabs(m_scalar(q, 1.0, l) - 1.0) <= 1e-15);
    for (int n = 0; n < 10; ++n) {
      const double t = n / 10.0;
      double prev = -1.0;
      for (int l = 1; l <= 60; ++l) {
        const double m = m_scalar(q, t, l);
        CHECK(m >= 0.0);
        CHECK(m <= 1.0 + 1e-15);
        if (l > 1) CHECK(m > prev - 1e-15);
        prev = m;
      }
    }
  }
  CHECK(m_scalar(QParam(0.5), 0.3, 3) < m_scalar(QParam(0.5), 0.3, 4));
}

TEST_CASE("guarded_sqrt") {
  CHECK(guarded_sqrt(0.0) == 0.0);
  CHECK(guarded_sqrt(0.25) == 0.5);
  CHECK(guarded_sqrt(-1e-16, 1e-12) == 0.0);
  CHECK_THROWS_AS(guarded_sqrt(-1e-3, 1e-12), std::domain_error);
}

TEST_CASE("precision") {
  Precision p;
  CHECK_NOTHROW(p.validate());
  p.tol_decay = 0;
  CHECK_THROWS(p.validate());
}

TEST_CASE("halfint arithmetic is exact") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-1000, 1000);
  for (int n = 0; n < 1000; ++n) {
    auto x = HalfInt::from_twice(dist(rng));
    auto y = HalfInt::from_twice(dist(rng));
    CHECK((x + y) - y == x);
    CHECK(same_parity(x, y) == ((x - y).twice() % 2 == 0));
  }
  CHECK(HalfInt::parse("3/2") == HalfInt::from_twice(3));
  CHECK(HalfInt::parse("-1/2") == -half);
  CHECK(HalfInt::parse("2.5") == HalfInt::from_twice(5));
  CHECK(HalfInt::parse("-0.5") == -half);
  CHECK(HalfInt::parse("7") == HalfInt(7));
  CHECK_THROWS(HalfInt::parse("1/3"));
  CHECK_THROWS(HalfInt::parse("x"));
  CHECK_THROWS(HalfInt::parse("1.25"));
  CHECK(HalfInt::from_twice(5).str() == "5/2");
  CHECK(HalfInt(4).str() == "4");
  CHECK_THROWS(half.to_int());
}
