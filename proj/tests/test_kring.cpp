#include "doctest.h"

#include <random>

#include "qkk/kring.hpp"

using namespace qkk;

namespace {

FusionElement closed_form(int k, int m) {
  FusionElement x;
  for (int j = std::abs(k - m); j <= k + m; j += 2) x.add(j, 1);
  return x;
}

}  // namespace

TEST_CASE("fusion examples") {
  CHECK(fuse(4, 0) == FusionElement::H(4));
  CHECK(fuse(3, 1) == FusionElement::H(2) + FusionElement::H(4));
  CHECK(fuse(0, 1) == FusionElement::H(1));
  CHECK(fuse(2, 2) == FusionElement::H(0) + FusionElement::H(2) + FusionElement::H(4));
  CHECK(fuse(2, 2).str() == "H_0 + H_2 + H_4");
  for (int k = 0; k <= 10; ++k)
    for (int m = 0; m <= 10; ++m) {
      CHECK(fuse(k, m) == closed_form(k, m));
      CHECK(fuse(k, m) == fuse(m, k));
      CHECK(fuse(k, m).nonnegative());
    }
}

TEST_CASE("fusion associativity") {
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b)
      for (int c = 0; c <= 8; ++c) {
        const auto A = FusionElement::H(a), C = FusionElement::H(c);
        CHECK(fuse(fuse(a, b), C) == fuse(A, fuse(b, c)));
      }
}

TEST_CASE("classical dimensions") {
  CHECK(dim_classical(5, 0) == 1);
  CHECK(dim_classical(3, 1) == 3);
  CHECK(dim_classical(3, 2) == 8);
  CHECK(dim_classical(3, 3) == 21);
  CHECK(dim_classical(2, 7) == 8);
  CHECK(dim_classical(10, 40) > Integer(1) << 128);
  for (int n : {3, 4, 5})
    for (int k = 0; k <= 10; ++k)
      for (int m = 0; m <= 10; ++m) CHECK(dim_classical(n, k) * dim_classical(n, m) == dim_classical(n, fuse(k, m)));
  CHECK_THROWS(dim_classical(1, 2));
}

TEST_CASE("quantum dimensions") {
  CHECK(dim_quantum(QParam(0.5), 0) == doctest::Approx(1.0));
  CHECK(dim_quantum(QParam(0.5), 1) == doctest::Approx(2.5).epsilon(1e-15));
  const QParam q(-0.7);
  CHECK(std::fabs(dim_quantum(q, 1) * dim_quantum(q, 1) - dim_quantum(q, 0) - dim_quantum(q, 2)) < 1e-12);
  for (double qv : {0.5, -0.7, 0.9})
    for (int k = 0; k <= 10; ++k)
      for (int m = 0; m <= 10; ++m) {
        const QParam p(qv);
        const double lhs = dim_quantum(p, k) * dim_quantum(p, m), rhs = dim_quantum(p, fuse(k, m));
        CHECK(std::fabs(lhs - rhs) < 1e-10 * std::max(1.0, std::fabs(lhs)));
      }
}

TEST_CASE("polynomials") {
  const ZtPoly p({3, -1});
  CHECK(p.degree() == 1);
  CHECK(p.evaluate(3) == 0);
  CHECK((p * p) == ZtPoly({9, -6, 1}));
  CHECK(ZtPoly({0, 0}).degree() == -1);
}

TEST_CASE("smith normal form examples") {
  auto I = IntMatrix::identity(3);
  CHECK(smith_normal_form(I).D == I);

  const IntMatrix A{{2, 4}, {6, 8}};
  const auto s = smith_normal_form(A);
  CHECK(s.D == IntMatrix{{2, 0}, {0, 4}});
  CHECK(s.U * A * s.V == s.D);
  CHECK(determinant(A) == -8);

  const IntMatrix col{{2}, {-1}};
  const auto sc = smith_normal_form(col);
  CHECK(sc.D == IntMatrix{{1}, {0}});
  CHECK(sc.U * col * sc.V == sc.D);

  const IntMatrix z(2, 3);
  CHECK(smith_normal_form(z).D == z);
}

TEST_CASE("smith normal form on random matrices") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> entry(-9, 9), size(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix A(static_cast<std::size_t>(size(rng)), static_cast<std::size_t>(size(rng)));
    for (std::size_t r = 0; r < A.rows(); ++r)
      for (std::size_t c = 0; c < A.cols(); ++c) A(r, c) = entry(rng);
    const auto s = smith_normal_form(A);
    INFO(A.str());
    CHECK(s.U * A * s.V == s.D);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    CHECK(s.D.is_diagonal());
    const auto inv = s.invariants();
    for (std::size_t k = 0; k < inv.size(); ++k) {
      CHECK(inv[k] > 0);
      CHECK(s.D(k, k) == inv[k]);  // nonzero factors come first
      if (k + 1 < inv.size()) CHECK(inv[k + 1] % inv[k] == 0);
    }
    if (A.rows() == A.cols()) {
      Integer prod = 1;
      for (std::size_t k = 0; k < A.rows(); ++k) prod *= s.D(k, k);
      CHECK(abs(determinant(A)) == prod);
    }
  }
}

TEST_CASE("koszul examples") {
  const auto M = multiplication_matrix(ZtPoly({2, -1}), 1);
  CHECK(M == IntMatrix{{2}, {-1}});
  const auto M3 = multiplication_matrix(ZtPoly({3, -1}), 10);
  CHECK(M3.rows() == 11);
  CHECK(M3.cols() == 10);
  CHECK(M3(4, 4) == 3);
  CHECK(M3(5, 4) == -1);

  auto rep = koszul_verify(3, 10);
  CHECK(rep.overall());
  CHECK(rep.results()["cokernel"] == "Z");
  CHECK_THROWS(koszul_verify(1, 3));
}

TEST_CASE("koszul for all n and truncations") {
  for (int n = 2; n <= 10; ++n)
    for (int D = 1; D <= 25; ++D) {
      auto rep = koszul_verify(n, D);
      INFO(n << " " << D);
      CHECK(rep.overall());
      CHECK(rep.results()["kernel_rank"] == 0);
    }
}

TEST_CASE("K-groups") {
  for (int n : {2, 3, 5, 10}) {
    auto k = ktheory_fo(n);
    CHECK(k.induced_endomorphism == 0);
    CHECK(k.k0.str() == "Z");
    CHECK(k.k1.str() == "Z");
    CHECK(k.k0.generator == "[1]");
    CHECK(k.k1.generator == "[u]");
    CHECK(k.certificate.overall());
  }
  AbelianGroup g{2, {Integer(3)}, ""};
  CHECK(g.str() == "Z^2 + Z/3");
  CHECK(AbelianGroup{}.str() == "0");
}
