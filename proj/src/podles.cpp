#include "qkk/podles.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qkk/anchors.hpp"
#include "qkk/extended.hpp"
#include "qkk/spectral.hpp"

namespace qkk {

std::string to_string(PodlesKind k) {
  switch (k) {
    case PodlesKind::A: return "A";
    case PodlesKind::B: return "B";
    case PodlesKind::B_star: return "B*";
  }
  return "?";
}

template <class S>
S podles_coeff(PodlesKind which, const Deformation<S>& d, HalfInt l, HalfInt i, HalfInt j, int dl) {
  if (which == PodlesKind::B_star) {
    // transpose: ⟨e^(l+dl)_{i−1}, B* e^(l)_i⟩ = ⟨e^(l)_i, B e^(l+dl)_{i−1}⟩
    return podles_coeff(PodlesKind::B, d, l + HalfInt(dl), i - HalfInt(1), j, -dl);
  }
  const BasisIndex src{l, i, j};
  if (!src.parity_ok()) throw std::invalid_argument("podles_coeff: parity violation at " + src.str());
  const int di = which == PodlesKind::B ? 1 : 0;
  const BasisIndex dst{l + HalfInt(dl), i + HalfInt(di), j};
  if (!src.admissible() || !dst.admissible()) return S(0);

  const int L = (2 * l).to_int(), I = (2 * i).to_int(), J = (2 * j).to_int();
  auto p = [&](int e) { return d.pow(e); };
  auto o = [&](int e) { return S(1) - p(e); };
  auto r = [&](int e) { return guarded_sqrt<S>(o(e)); };

  if (which == PodlesKind::A) {
    switch (dl) {
      case -1:
        return -p(L + (i + j).to_int() - 1) * r(L - J) * r(L + I) * r(L + J) * r(L - I) /
               (r(2 * L - 2) * o(2 * L) * r(2 * L + 2));
      case 0: {
        S v = p(L + J) * o(L - J + 2) * o(L + I + 2) / (o(2 * L + 2) * o(2 * L + 4));
        if (L > 0) v += p(L + I) * o(L + J) * o(L - I) / (o(2 * L) * o(2 * L + 2));
        return v;
      }
      case 1:
        return -p(L + (i + j).to_int() + 1) * r(L + J + 2) * r(L - I + 2) * r(L - J + 2) * r(L + I + 2) /
               (o(2 * L + 4) * r(2 * L + 6) * r(2 * L + 2));
    }
  } else {
    const int li = (l + i).to_int(), lj = (l + j).to_int();
    switch (dl) {
      case -1:
        return p(2 * li + lj) * r(L - J) * r(L - I - 2) * r(L + J) * r(L - I) /
               (r(2 * L - 2) * o(2 * L) * r(2 * L + 2));
      case 0:
        return p(li) * o(L + J) * r(L + I + 2) * r(L - I) / (o(2 * L) * o(2 * L + 2)) -
               p(li + 2 * lj + 2) * o(L - J + 2) * r(L - I) * r(L + I + 2) / (o(2 * L + 2) * o(2 * L + 4));
      case 1:
        return -p(lj) * r(L + J + 2) * r(L + I + 4) * r(L - J + 2) * r(L + I + 2) /
               (o(2 * L + 4) * r(2 * L + 6) * r(2 * L + 2));
    }
  }
  throw std::invalid_argument("podles_coeff: dl must be -1, 0 or 1");
}

template double podles_coeff<double>(PodlesKind, const Deformation<double>&, HalfInt, HalfInt, HalfInt, int);
template ExtendedReal podles_coeff<ExtendedReal>(PodlesKind, const Deformation<ExtendedReal>&, HalfInt, HalfInt,
                                                 HalfInt, int);

double podles_coeff(PodlesKind which, const QParam& q, HalfInt l, HalfInt i, HalfInt j, int dl) {
  return podles_coeff<double>(which, Deformation<double>(q), l, i, j, dl);
}

BandedOperator podles_op(PodlesKind which, const QParam& q, SpacePtr space) {
  const Deformation<double> d(q);
  const int di = which == PodlesKind::A ? 0 : which == PodlesKind::B ? 1 : -1;
  return BandedOperator::build(space, space, HalfInt(1), [&](const BasisIndex& b, auto&& emit) {
    for (int dl = -1; dl <= 1; ++dl)
      emit(BasisIndex{b.l + HalfInt(dl), b.i + HalfInt(di), b.j}, podles_coeff(which, d, b.l, b.i, b.j, dl));
  });
}

VerificationReport check_podles_relations(const QParam& q, HalfInt lmax, double tol) {
  q.require_strict("check_podles_relations");
  if (lmax < HalfInt(3)) throw std::invalid_argument("check_podles_relations: lmax must be >= 3");
  VerificationReport rep("podles");
  const double qv = q.value();
  auto space = full_space(lmax);
  const auto A = podles_op(PodlesKind::A, q, space);
  const auto B = podles_op(PodlesKind::B, q, space);
  const auto Bs = podles_op(PodlesKind::B_star, q, space);
  const auto one = BandedOperator::identity(space);
  const std::string rel = anchors::podles_relations;

  rep.below("A = A*", rel, interior_norm(A - A.adjoint()), tol);
  rep.below("AB = q^2 BA", rel, interior_norm(A * B - (qv * qv) * (B * A)), tol);
  rep.below("BB* = q^-2 A(1-A)", rel, interior_norm(B * Bs - (1.0 / (qv * qv)) * (A * (one - A))), tol);
  rep.below("B*B = A(1-q^2 A)", rel, interior_norm(Bs * B - A * (one - (qv * qv) * A)), tol);
  rep.below("B* table = transpose of B", rel, interior_norm(Bs - B.adjoint()), tol);

  const auto g = regular_images(q, lmax);
  const std::string comp = anchors::podles_composites;
  rep.below("A table = gamma* gamma", comp, interior_norm(A - g.gamma_star * g.gamma), tol);
  rep.below("B table = alpha* gamma", comp, interior_norm(B - g.alpha_star * g.gamma), tol);
  rep.below("B* table = gamma* alpha", comp, interior_norm(Bs - g.gamma_star * g.alpha), tol);

  const double haar = haar_state({Generator::gamma_star, Generator::gamma}, q, 1).real();
  const double diag = podles_coeff(PodlesKind::A, q, 0, 0, 0, 0);
  rep.below("Haar state of gamma* gamma = A diagonal at e(0)", anchors::haar,
            std::fabs(haar - diag), 1e-12);
  rep.results()["haar_gamma_star_gamma"] = haar;
  rep.results()["A_diagonal_e0"] = diag;
  return rep;
}

double FredholmModule::unitarity_residual() const {
  const auto one_p = BandedOperator::identity(plus_space);
  const auto one_m = BandedOperator::identity(minus_space);
  return std::max({operator_norm((F_minus * F_plus - one_p).matrix()),
                   operator_norm((F_plus * F_minus - one_m).matrix()),
                   operator_norm((F_minus - F_plus.adjoint()).matrix())});
}

FredholmModule make_fredholm_module(int k_plus, int k_minus, HalfInt lmax) {
  auto plus = bundle_space(k_plus, lmax);
  auto minus = bundle_space(k_minus, lmax);
  const HalfInt jm = HalfInt::from_twice(k_minus);
  auto Fp = BandedOperator::build(plus, minus, HalfInt(0), [&](const BasisIndex& b, auto&& emit) {
    emit(BasisIndex{b.l, b.i, jm}, 1.0);
  });
  auto Fm = Fp.adjoint();
  return {plus, minus, std::move(Fp), std::move(Fm)};
}

double commutator_tail(const FredholmModule& F, const BandedOperator& xp, const BandedOperator& xm, HalfInt L0) {
  if (!(*xp.domain() == *F.plus_space) || !(*xm.domain() == *F.minus_space))
    throw std::invalid_argument("commutator_tail: operators must act on the module's spaces");
  const HalfInt margin = std::max(xp.interior_margin(), xm.interior_margin());
  if (!(L0 < F.lmax() - margin))
    throw std::invalid_argument("commutator_tail: L0 must be below lmax - interior margin");
  // [F, x] = [[0, F₋x₋ − x₊F₋], [F₊x₊ − x₋F₊, 0]]
  const auto lower = F.F_plus * xp - xm * F.F_plus;
  const auto upper = F.F_minus * xm - xp * F.F_minus;
  return std::max(tail_norm(lower, L0), tail_norm(upper, L0));
}

double commutator_tail(const FredholmModule& F, PodlesKind x, const QParam& q, HalfInt L0) {
  return commutator_tail(F, podles_op(x, q, F.plus_space), podles_op(x, q, F.minus_space), L0);
}

BandedOperator word_op(const std::vector<Generator>& word, const QParam& q, SpacePtr domain) {
  auto out = BandedOperator::identity(domain);
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = generator_op(*it, q, out.codomain()) * out;
  return out;
}

double commutator_tail(const FredholmModule& F, const std::vector<Generator>& word, const QParam& q, HalfInt L0) {
  int winding = 0;
  for (auto g : word) winding += winding_shift(g);
  if (winding != 0) throw std::invalid_argument("commutator_tail: word must have zero total winding");
  return commutator_tail(F, word_op(word, q, F.plus_space), word_op(word, q, F.minus_space), L0);
}

IndexResult fredholm_index(const BandedOperator& map, double threshold) {
  const auto rank = numerical_rank(map.matrix(), threshold);
  IndexResult r;
  r.rank = rank.rank;
  r.kernel = map.domain()->dim() - rank.rank;
  r.cokernel = map.codomain()->dim() - rank.rank;
  r.index = static_cast<long>(r.kernel) - static_cast<long>(r.cokernel);
  r.smallest_kept = rank.smallest_kept;
  r.largest_dropped = rank.largest_dropped;
  return r;
}

FitResult log_linear_fit(const std::vector<double>& x, const std::vector<double>& y, double floor) {
  if (x.size() != y.size()) throw std::invalid_argument("log_linear_fit: size mismatch");
  std::vector<double> xs, ys;
  for (std::size_t n = 0; n < x.size(); ++n)
    if (y[n] > floor && std::isfinite(y[n])) {
      xs.push_back(x[n]);
      ys.push_back(std::log(y[n]));
    }
  FitResult f;
  f.points = xs.size();
  if (xs.size() < 2) return f;
  const double nx = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / nx;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / nx;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t n = 0; n < xs.size(); ++n) {
    sxx += (xs[n] - mx) * (xs[n] - mx);
    sxy += (xs[n] - mx) * (ys[n] - my);
    syy += (ys[n] - my) * (ys[n] - my);
  }
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r_squared = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return f;
}

}  // namespace qkk
