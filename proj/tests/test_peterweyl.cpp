#include "doctest.h"

#include <Eigen/Dense>

#include <random>

#include "qkk/peterweyl.hpp"
#include "qkk/spectral.hpp"

using namespace qkk;

namespace {

const HalfInt h = half;

// e^(l)_{i,j} coefficients straight from the closed forms with plain doubles
double a_plus_ref(double q, double l, double i, double j) {
  auto p = [&](double e) { return std::pow(q, std::lround(e)); };
  return p(2 * l + i + j + 1) * std::sqrt(1 - p(2 * l - 2 * j + 2)) * std::sqrt(1 - p(2 * l - 2 * i + 2)) /
         (std::sqrt(1 - p(4 * l + 2)) * std::sqrt(1 - p(4 * l + 4)));
}

}  // namespace

TEST_CASE("basis and truncation") {
  auto s = TruncatedSpace::bundle(0, 4);
  CHECK(s.dim() == 25);
  auto f = TruncatedSpace::full(1);
  CHECK(f.dim() == 1 + 4 + 9);
  auto e1 = TruncatedSpace::bundle(1, HalfInt::from_twice(5));
  for (const auto& b : e1.basis()) {
    CHECK(b.j == h);
    CHECK(b.admissible());
  }
  CHECK(e1.dim() == 2 + 4 + 6);
  CHECK(TruncatedSpace::bundle(-2, 3).dim() == 3 + 5 + 7);
  for (std::size_t n = 0; n < f.dim(); ++n) CHECK(*f.find(f.at(n)) == n);
  CHECK_FALSE(f.find({HalfInt(2), 0, 0}).has_value());
}

TEST_CASE("regular coefficients: examples and vanishing") {
  QParam q(0.5);
  CHECK(coeff_reg(RegSymbol::a_plus, q, 0, 0, 0) == doctest::Approx(0.4472135955).epsilon(1e-10));
  CHECK(coeff_reg(RegSymbol::c_plus, q, 0, 0, 0) == doctest::Approx(-0.894427191).epsilon(1e-9));
  CHECK(coeff_reg(RegSymbol::c_minus, q, 0, 0, 0) == 0.0);
  CHECK(coeff_reg(RegSymbol::a_minus, q, 0, 0, 0) == 0.0);
  for (int tl = 1; tl <= 12; ++tl) {
    const auto l = HalfInt::from_twice(tl);
    for (int tj = -tl; tj <= tl; tj += 2) {
      const auto j = HalfInt::from_twice(tj);
      CHECK(coeff_reg(RegSymbol::a_minus, q, l, -l, j) == 0.0);
      CHECK(coeff_reg(RegSymbol::c_minus, q, l, l, j) == 0.0);
    }
  }
  CHECK_THROWS(coeff_reg(RegSymbol::a_plus, q, 1, h, 0));
}

TEST_CASE("regular coefficients match an independent evaluation") {
  for (double qv : {0.3, -0.5, 0.9}) {
    QParam q(qv);
    for (int tl = 0; tl <= 10; ++tl)
      for (int ti = -tl; ti <= tl; ti += 2)
        for (int tj = -tl; tj <= tl; tj += 2) {
          const double l = tl / 2.0, i = ti / 2.0, j = tj / 2.0;
          const double got = coeff_reg(RegSymbol::a_plus, q, HalfInt::from_twice(tl), HalfInt::from_twice(ti),
                                       HalfInt::from_twice(tj));
          CHECK(got == doctest::Approx(a_plus_ref(qv, l, i, j)).epsilon(1e-13));
        }
  }
}

TEST_CASE("generator action on the unit vector") {
  QParam q(0.5);
  auto e0 = StateVector::basis_vector({0, 0, 0});
  auto g = apply(Generator::gamma, q, e0);
  CHECK(g.amplitudes.size() == 1);
  CHECK(g[{h, h, -h}].real() == doctest::Approx(-1.0 / std::sqrt(1.25)));
}

TEST_CASE("defining relations on the full truncation") {
  for (double qv : {0.3, -0.3, 0.5, -0.5, 0.9, -0.9}) {
    auto g = regular_images(QParam(qv), 8);
    for (const auto& r : defining_relation_residuals(g, qv)) {
      INFO(r.name << " q=" << qv);
      CHECK(r.residual < 1e-12);
    }
  }
}

TEST_CASE("relations fail visibly for a corrupted generator") {
  auto g = regular_images(QParam(0.5), 6);
  auto broken = g;
  broken.gamma = 1.01 * g.gamma;
  auto res = defining_relation_residuals(broken, 0.5);
  CHECK(res[3].residual > 1e-3);
}

TEST_CASE("relations hold on line bundles") {
  QParam q(-0.7);
  const HalfInt lmax = 10;
  for (int k = -2; k <= 2; ++k) {
    auto e = bundle_space(k, lmax);
    auto a = generator_op(Generator::alpha, q, e);
    auto as = generator_op(Generator::alpha_star, q, a.codomain());
    auto c = generator_op(Generator::gamma, q, e);
    auto cs = generator_op(Generator::gamma_star, q, c.codomain());
    CHECK(a.codomain()->k() == k - 1);
    CHECK(interior_norm(as * a + cs * c - BandedOperator::identity(e)) < 1e-12);
  }
}

TEST_CASE("adjoint consistency and grading") {
  for (double qv : {0.3, -0.9}) CHECK(adjoint_consistency(QParam(qv), 10) < 1e-12);
  auto space = full_space(4);
  for (auto gen : {Generator::alpha, Generator::gamma, Generator::alpha_star, Generator::gamma_star}) {
    auto op = generator_op(gen, QParam(0.5), space);
    for (const auto& [dl, di, dj] : op.shifts()) {
      CHECK(abs(dl) == h);
      CHECK(dj.twice() == winding_shift(gen));
      const int expect_di = (gen == Generator::alpha || gen == Generator::gamma_star) ? -1 : 1;
      CHECK(di.twice() == expect_di);
    }
  }
}

TEST_CASE("involution") {
  QParam q(0.5);
  auto e = StateVector::basis_vector({h, h, -h});
  auto s = involution(e, q);
  CHECK(s[{h, -h, h}].real() == doctest::Approx(-1.0));
  auto e0 = StateVector::basis_vector({0, 0, 0});
  CHECK(involution(e0, q)[{0, 0, 0}].real() == 1.0);

  std::mt19937 rng(11);
  std::normal_distribution<double> nd;
  const auto space = TruncatedSpace::full(2);
  StateVector v;
  for (const auto& b : space.basis()) v.add(b, {nd(rng), nd(rng)});
  auto back = involution(involution(v, QParam(-0.3)), QParam(-0.3));
  CHECK((back - v).max_abs() < 1e-14);
}

TEST_CASE("haar state") {
  QParam q(0.5);
  CHECK(haar_state({}, q, 0).real() == 1.0);
  CHECK(std::abs(haar_state({Generator::alpha}, q, 1)) == 0.0);
  CHECK(haar_state({Generator::gamma_star, Generator::gamma}, q, 1).real() == doctest::Approx(0.8).epsilon(1e-14));
  CHECK_THROWS(haar_state({Generator::gamma_star, Generator::gamma}, q, h));
  // φ(α*α) + φ(γ*γ) = 1
  const double s = haar_state({Generator::alpha_star, Generator::alpha}, q, 1).real() +
                   haar_state({Generator::gamma_star, Generator::gamma}, q, 1).real();
  CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("haar state is positive on x* x") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, 3);
  for (double qv : {0.5, -0.7}) {
    QParam q(qv);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Generator> x(1 + trial % 4);
      for (auto& g : x) g = static_cast<Generator>(pick(rng));
      std::vector<Generator> word;
      for (auto it = x.rbegin(); it != x.rend(); ++it) word.push_back(star(*it));
      word.insert(word.end(), x.begin(), x.end());
      auto val = haar_state(word, q, 4);
      CHECK(val.real() >= -1e-14);
      CHECK(std::fabs(val.imag()) == 0.0);
    }
  }
}

TEST_CASE("spectral projections partition a vector") {
  auto e = StateVector::basis_vector({1, 0, 0});
  CHECK(spectral_project(e, 1)[{1, 0, 0}].real() == 1.0);
  CHECK(spectral_project(e, 0).amplitudes.empty());

  std::mt19937 rng(5);
  std::normal_distribution<double> nd;
  const auto space = TruncatedSpace::full(3);
  StateVector v;
  for (const auto& b : space.basis()) v.add(b, nd(rng));
  StateVector sum;
  for (int tl = 0; tl <= 6; ++tl) {
    auto p = spectral_project(v, HalfInt::from_twice(tl));
    CHECK((spectral_project(p, HalfInt::from_twice(tl)) - p).max_abs() == 0.0);
    for (const auto& [b, x] : p.amplitudes) sum.add(b, x);
  }
  CHECK((sum - v).max_abs() == 0.0);
}

TEST_CASE("quantum dimension") {
  QParam q(0.5);
  CHECK(quantum_dimension(q, 0) == doctest::Approx(1.0));
  CHECK(quantum_dimension(q, h) == doctest::Approx(2.5));
  CHECK(quantum_dimension(q, 1) == doctest::Approx(5.25));
  CHECK(quantum_dimension(QParam(1.0), 1) == 3.0);
}

TEST_CASE("operator norms via blocks agree with a dense SVD") {
  auto g = regular_images(QParam(-0.6), 3);
  auto op = g.alpha * g.gamma_star + g.gamma;
  Eigen::MatrixXd dense(op.matrix());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(dense);
  CHECK(operator_norm(op.matrix()) == doctest::Approx(svd.singularValues()(0)).epsilon(1e-12));
  auto sv = singular_values(op.matrix());
  CHECK(sv.size() <= static_cast<std::size_t>(svd.singularValues().size()));
  auto id = BandedOperator::identity(op.domain());
  CHECK(numerical_rank(id.matrix()).rank == op.domain()->dim());
  CHECK_THROWS(numerical_rank((5e-8 * id).matrix()));
}
