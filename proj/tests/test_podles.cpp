#include "doctest.h"

#include "qkk/podles.hpp"
#include "qkk/spectral.hpp"

using namespace qkk;

namespace {
const HalfInt h = half;
}

TEST_CASE("A table examples") {
  QParam q(0.5);
  CHECK(podles_coeff(PodlesKind::A, q, 0, 0, 0, 0) == doctest::Approx(0.8).epsilon(1e-15));
  for (int tl = 2; tl <= 10; ++tl) {
    const auto l = HalfInt::from_twice(tl);
    for (int ti = -tl; ti <= tl; ti += 2) {
      CHECK(podles_coeff(PodlesKind::A, q, l, HalfInt::from_twice(ti), l, -1) == 0.0);
      CHECK(podles_coeff(PodlesKind::A, q, l, HalfInt::from_twice(ti), -l, -1) == 0.0);
    }
  }
  CHECK_THROWS(podles_coeff(PodlesKind::A, q, 1, h, 0, 0));
}

TEST_CASE("A and B tables equal the generator composites") {
  QParam q(-0.7);
  const HalfInt lmax = 15;
  auto space = full_space(lmax);
  auto g = regular_images(q, lmax);
  auto A = podles_op(PodlesKind::A, q, space);
  auto B = podles_op(PodlesKind::B, q, space);
  CHECK(interior_norm(A - g.gamma_star * g.gamma) < 1e-11);
  CHECK(interior_norm(B - g.alpha_star * g.gamma) < 1e-11);
  auto asym = A - A.adjoint();
  CHECK(interior_norm(asym) < 1e-14);
}

TEST_CASE("podles relations") {
  for (double qv : {0.5, -0.9, 0.3}) {
    auto rep = check_podles_relations(QParam(qv), 10, 1e-12);
    for (const auto& c : rep.checks()) {
      INFO(c.name << " q=" << qv << " value=" << c.value);
      CHECK(c.pass);
    }
    CHECK(rep.overall());
  }
  CHECK_THROWS(check_podles_relations(QParam(0.5), 2));
}

TEST_CASE("a wrong table entry is detected") {
  QParam q(0.5);
  auto space = full_space(8);
  auto A = podles_op(PodlesKind::A, q, space);
  auto B = podles_op(PodlesKind::B, q, space);
  auto A2 = 1.001 * A;
  CHECK(interior_norm(A2 * B - 0.25 * (B * A2)) < 1e-12);  // homogeneous: still commutes
  auto one = BandedOperator::identity(space);
  auto Bs = B.adjoint();
  CHECK(interior_norm(Bs * B - A2 * (one - 0.25 * A2)) > 1e-4);
}

TEST_CASE("Fredholm module on E_1 + E_-1") {
  auto F = dirac_module(10);
  CHECK(F.unitarity_residual() == 0.0);
  auto idx = fredholm_index(F.F_plus);
  CHECK(idx.index == 0);
  CHECK(idx.kernel == 0);
}

TEST_CASE("index of F+ on (E_0, E_-2) is one for every truncation") {
  for (int L = 1; L <= 30; ++L) {
    auto M = make_fredholm_module(0, -2, L);
    CHECK(M.plus_space->dim() == static_cast<std::size_t>((L + 1) * (L + 1)));
    CHECK(M.minus_space->dim() == static_cast<std::size_t>((L + 1) * (L + 1) - 1));
    auto idx = fredholm_index(M.F_plus);
    CHECK(idx.index == 1);
    CHECK(idx.kernel == 1);
    CHECK(idx.cokernel == 0);
    CHECK(fredholm_index(M.F_plus.adjoint()).index == -1);
  }
}

TEST_CASE("ill-conditioned rank decision is an error") {
  auto M = make_fredholm_module(1, -1, 3);
  CHECK_THROWS_AS(fredholm_index(3e-8 * M.F_plus), std::runtime_error);
  CHECK(fredholm_index(1e-9 * M.F_plus).kernel == M.plus_space->dim());
}

TEST_CASE("commutator tails") {
  auto F = dirac_module(25);
  QParam q(0.5);
  const double t5 = commutator_tail(F, PodlesKind::A, q, 5);
  const double t10 = commutator_tail(F, PodlesKind::A, q, 10);
  const double t15 = commutator_tail(F, PodlesKind::A, q, 15);
  CHECK(t5 > t10);
  CHECK(t10 > t15);
  // entries near i = -l are O(|q|^l), so the tail scales like |q|^L0
  CHECK(t15 < std::pow(0.5, 15));
  CHECK(t15 > 1e-7);
  auto id_p = BandedOperator::identity(F.plus_space);
  auto id_m = BandedOperator::identity(F.minus_space);
  CHECK(commutator_tail(F, id_p, id_m, 3) == 0.0);
  CHECK(commutator_tail(F, PodlesKind::B, QParam(-0.5), 15) < 3 * std::pow(0.5, 15));
  CHECK(commutator_tail(F, PodlesKind::A, QParam(0.3), 15) < 1e-6);
  // the same tail through the generator word
  const double w = commutator_tail(F, {Generator::gamma_star, Generator::gamma}, q, 10);
  CHECK(w == doctest::Approx(t10).epsilon(1e-6));
  CHECK_THROWS(commutator_tail(F, {Generator::gamma}, q, 10));
  CHECK_THROWS(commutator_tail(F, PodlesKind::A, q, 24));
}

TEST_CASE("commutator tails decay geometrically") {
  auto F = dirac_module(30);
  for (double qv : {0.5, -0.5, 0.3}) {
    std::vector<double> x, y;
    double prev = 1e300;
    for (int L0 = 2; L0 <= 20; ++L0) {
      const double t = commutator_tail(F, PodlesKind::A, QParam(qv), L0);
      CHECK(t <= prev * (1 + 1e-12));
      prev = t;
      x.push_back(L0);
      y.push_back(t);
    }
    auto fit = log_linear_fit(x, y, 1e-13);
    CHECK(fit.r_squared > 0.99);
    CHECK(fit.slope == doctest::Approx(std::log(std::fabs(qv))).epsilon(0.01));
  }
}

TEST_CASE("log-linear fit") {
  std::vector<double> x{1, 2, 3, 4}, y{2, 4, 8, 16};
  auto f = log_linear_fit(x, y);
  CHECK(f.slope == doctest::Approx(std::log(2.0)));
  CHECK(f.r_squared == doctest::Approx(1.0));
}
