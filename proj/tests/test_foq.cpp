#include "doctest.h"

#include <cmath>

#include "qkk/foq.hpp"

using namespace qkk;

namespace {

std::string rejection(const ComplexMatrix& m) {
  try {
    validate_q(m);
  } catch (const QMatrixError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("validation") {
  CHECK(validate_q(ComplexMatrix::Identity(3, 3)).sign() == 1);
  CHECK(canonical_su2_qmatrix(0.5).sign() == -1);

  ComplexMatrix raw(2, 2);
  raw << 0.0, -0.5, 1.0, 0.0;
  CHECK(rejection(raw) == "not scalar");
  ComplexMatrix shear(2, 2);
  shear << 1.0, 1.0, 0.0, 1.0;
  CHECK(rejection(shear) == "not scalar");
  CHECK(rejection(ComplexMatrix::Zero(2, 2)) == "singular");
  ComplexMatrix rank1(2, 2);
  rank1 << 1.0, 1.0, 1.0, 1.0;
  CHECK(rejection(rank1) == "singular");
  CHECK_THROWS_AS(validate_q(ComplexMatrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("invariants") {
  auto i2 = invariant_pair(validate_q(ComplexMatrix::Identity(2, 2)));
  CHECK(i2.sign == 1);
  CHECK(i2.trace == doctest::Approx(2.0));
  CHECK(invariant_pair(validate_q(ComplexMatrix::Identity(3, 3))).trace == doctest::Approx(3.0));
  auto c = invariant_pair(canonical_su2_qmatrix(0.5));
  CHECK(c.sign == -1);
  CHECK(c.trace == doctest::Approx(2.5).epsilon(1e-14));
}

TEST_CASE("canonical matrices") {
  auto one = canonical_su2_qmatrix(1.0).entries();
  CHECK(one(0, 1).real() == -1.0);
  CHECK(one(1, 0).real() == 1.0);
  CHECK(canonical_su2_qmatrix(1.0).sign() == -1);
  CHECK(canonical_su2_qmatrix(-1.0).sign() == 1);
  CHECK(invariant_pair(canonical_su2_qmatrix(-1.0)).trace == doctest::Approx(2.0));
  // u = Q ū Q⁻¹ for Q = [[0, a], [b, 0]] reduces to a/b = −q and −q b/a = 1
  for (double q : {0.1, -0.5, 0.9, -1.0}) {
    auto m = canonical_su2_qmatrix(q).entries();
    const auto a = m(0, 1), b = m(1, 0);
    CHECK(std::abs(a / b + q) < 1e-15);
    CHECK(std::abs(-q * b / a - 1.0) < 1e-15);
    CHECK(canonical_su2_qmatrix(q).sign() == -(q > 0 ? 1 : -1));
  }
  CHECK_THROWS(canonical_su2_qmatrix(0.0));
  CHECK_THROWS(canonical_su2_qmatrix(1.5));
}

TEST_CASE("solver") {
  for (double q : {0.1, -0.1, 0.5, -0.5, 0.9, -0.9, 1.0, -1.0})
    CHECK(std::fabs(solve_su2_parameter(canonical_su2_qmatrix(q)) - q) < 1e-12);
  CHECK(solve_su2_parameter(validate_q(ComplexMatrix::Identity(2, 2))) == -1.0);
  CHECK(std::fabs(solve_su2_parameter(validate_q(ComplexMatrix::Identity(3, 3))) + (3 - std::sqrt(5.0)) / 2) < 1e-12);
}

TEST_CASE("equivalence examples") {
  auto i2 = validate_q(ComplexMatrix::Identity(2, 2));
  auto i3 = validate_q(ComplexMatrix::Identity(3, 3));
  auto i4 = validate_q(ComplexMatrix::Identity(4, 4));
  CHECK(monoidally_equivalent(i2, i2));
  CHECK(monoidally_equivalent(i3, canonical_su2_qmatrix(-(3 - std::sqrt(5.0)) / 2)));
  CHECK_FALSE(monoidally_equivalent(i3, i4));
  CHECK_FALSE(monoidally_equivalent(i2, canonical_su2_qmatrix(1.0)));
}

TEST_CASE("random valid matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    const int sign = (n % 2 == 0 && trial % 3 == 0) ? -1 : 1;
    auto Q = random_valid_qmatrix(rng, n, sign);
    CHECK(Q.sign() == sign);
    CHECK(invariant_pair(Q).trace >= n - 1e-10);
    const double q = solve_su2_parameter(Q);
    CHECK(std::fabs(q) <= 1.0);
    CHECK(monoidally_equivalent(Q, canonical_su2_qmatrix(q), 1e-9));
  }
  CHECK_THROWS(random_valid_qmatrix(rng, 3, -1));
}

TEST_CASE("equivalence relation on random matrices") {
  std::mt19937_64 rng(11);
  std::vector<QMatrix> pool;
  // few distinct invariants so that equivalent pairs actually occur
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + 2 * (k % 2);
    std::mt19937_64 shape(static_cast<std::uint64_t>(k % 5));
    auto base = random_valid_qmatrix(shape, n, k % 3 == 0 ? -1 : 1);
    std::normal_distribution<double> g;
    ComplexMatrix G(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) G(r, c) = {g(rng), g(rng)};
    ComplexMatrix U = Eigen::HouseholderQR<ComplexMatrix>(G).householderQ();
    pool.push_back(validate_q(U * base.entries() * U.transpose()));
  }
  int equivalent_pairs = 0;
  for (const auto& a : pool) {
    CHECK(monoidally_equivalent(a, a));
    for (const auto& b : pool) {
      CHECK(monoidally_equivalent(a, b) == monoidally_equivalent(b, a));
      if (monoidally_equivalent(a, b) && &a != &b) ++equivalent_pairs;
      for (const auto& c : pool)
        if (monoidally_equivalent(a, b) && monoidally_equivalent(b, c)) CHECK(monoidally_equivalent(a, c));
    }
  }
  CHECK(equivalent_pairs > 0);
}
