#include "qkk/homotopy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qkk/anchors.hpp"
#include "qkk/extended.hpp"
#include "qkk/podles.hpp"
#include "qkk/spectral.hpp"

namespace qkk {

std::string to_string(Family f, bool rescaled) {
  static const char* lower[] = {"a", "b", "c", "d"};
  static const char* upper[] = {"A", "B", "C", "D"};
  return (rescaled ? upper : lower)[static_cast<int>(f)];
}

Generator generator_of(Family f) {
  switch (f) {
    case Family::a: return Generator::alpha;
    case Family::b: return Generator::alpha_star;
    case Family::c: return Generator::gamma;
    case Family::d: return Generator::gamma_star;
  }
  return Generator::alpha;
}

Family family_of(Generator g) {
  switch (g) {
    case Generator::alpha: return Family::a;
    case Generator::alpha_star: return Family::b;
    case Generator::gamma: return Family::c;
    case Generator::gamma_star: return Family::d;
  }
  return Family::a;
}

namespace {

template <class S>
struct Powers {
  const Deformation<S>& d;
  S P(HalfInt e) const { return d.pow(e.to_int()); }
  S O(HalfInt e) const { return S(1) - P(e); }
  S R(HalfInt e) const { return guarded_sqrt<S>(O(e)); }
};

template <class S>
S grouped_diagonal(Family f, const Powers<S>& w, const TPoint<S>& t, HalfInt l, HalfInt i) {
  const S& s = t.s;
  const S& si = t.si;
  const S den_hi = (S(1) + w.P(2 * l + 2)) * w.O(4 * l + 2);
  const S den_lo = (S(1) + w.P(2 * l)) * w.O(4 * l + 2);
  switch (f) {
    case Family::a:
      return (s * w.P(2 * l - i) + si * w.P(2 * l - i + 2)) * w.O(2 * l + 2 * i + 2) / den_hi +
             (s * w.P(2 * l + i) + si * w.P(2 * l + i + 2)) * w.O(2 * l - 2 * i) / den_lo;
    case Family::b:
      return (si * w.P(2 * l + i + 2) + s * w.P(2 * l + i)) * w.O(2 * l - 2 * i + 2) / den_hi +
             (si * w.P(2 * l - i + 2) + s * w.P(2 * l - i)) * w.O(2 * l + 2 * i) / den_lo;
    case Family::c:
      return w.R(2 * l + 2 * i + 2) * w.R(2 * l - 2 * i) *
             ((s * w.P(3 * l + 1) + si * w.P(3 * l + 3)) / den_hi - (s * w.P(l - 1) + si * w.P(l + 1)) / den_lo);
    case Family::d:
      return w.R(2 * l + 2 * i) * w.R(2 * l - 2 * i + 2) *
             ((si * w.P(3 * l + 1) + s * w.P(3 * l - 1)) / den_lo - (si * w.P(l + 1) + s * w.P(l - 1)) / den_hi);
  }
  return S(0);
}

}  // namespace

template <class S>
S eval_t_coeff(Family f, int k, const Deformation<S>& d, const TPoint<S>& t, HalfInt l, HalfInt i, HalfInt j) {
  const BasisIndex src{l, i, j};
  if (!src.parity_ok()) throw std::invalid_argument("eval_t_coeff: parity violation at " + src.str());
  if (k < -1 || k > 1) throw std::invalid_argument("eval_t_coeff: band must be -1, 0 or 1");
  const BasisIndex dst{l + HalfInt(k), i + HalfInt(family_di(f)), j};
  if (!src.admissible() || !dst.admissible()) return S(0);

  const Powers<S> w{d};
  const S& s = t.s;
  const S& si = t.si;
  const bool lpos = l > HalfInt(0);

  if (k == 0 && j == HalfInt(0)) return grouped_diagonal(f, w, t, l, i);

  if (k == 1) {
    const S D1 = w.R(4 * l + 2) * w.O(4 * l + 4) * w.R(4 * l + 6);
    switch (f) {
      case Family::a:
        return (s * w.P(4 * l + 3) - si * w.P(2 * l + 3)) * w.R(2 * l + 2 * j + 2) * w.R(2 * l + 2 * i + 2) *
               w.R(2 * l - 2 * j + 2) * w.R(2 * l - 2 * i + 2) / D1;
      case Family::b:
        return (si * w.P(1) - s * w.P(2 * l + 1)) * w.R(2 * l - 2 * j + 2) * w.R(2 * l - 2 * i + 2) *
               w.R(2 * l + 2 * j + 2) * w.R(2 * l + 2 * i + 2) / D1;
      case Family::c:
        return (si * w.P(l - i + 1) - s * w.P(3 * l - i + 1)) * w.R(2 * l + 2 * j + 2) * w.R(2 * l + 2 * i + 2) *
               w.R(2 * l - 2 * j + 2) * w.R(2 * l + 2 * i + 4) / D1;
      case Family::d:
        return (si * w.P(l + i + 1) - s * w.P(3 * l + i + 1)) * w.R(2 * l - 2 * j + 2) * w.R(2 * l - 2 * i + 2) *
               w.R(2 * l + 2 * j + 2) * w.R(2 * l - 2 * i + 4) / D1;
    }
  }

  if (k == -1) {
    const S Dm = w.O(4 * l) * w.R(4 * l + 2) * w.R(4 * l - 2);
    switch (f) {
      case Family::a:
        return (s * w.P(-1) - si * w.P(2 * l + 1)) * w.R(2 * l - 2 * j) * w.R(2 * l - 2 * i) * w.R(2 * l + 2 * j) *
               w.R(2 * l + 2 * i) / Dm;
      case Family::b:
        return (si * w.P(4 * l + 1) - s * w.P(2 * l - 1)) * w.R(2 * l + 2 * j) * w.R(2 * l + 2 * i) *
               w.R(2 * l - 2 * j) * w.R(2 * l - 2 * i) / Dm;
      case Family::c:
        return (s * w.P(l + i - 1) - si * w.P(3 * l + i + 1)) * w.R(2 * l - 2 * j) * w.R(2 * l - 2 * i) *
               w.R(2 * l + 2 * j) * w.R(2 * l - 2 * i - 2) / Dm;
      case Family::d:
        return (s * w.P(l - i - 1) - si * w.P(3 * l - i + 1)) * w.R(2 * l + 2 * j) * w.R(2 * l + 2 * i) *
               w.R(2 * l - 2 * j) * w.R(2 * l + 2 * i - 2) / Dm;
    }
  }

  // k = 0, j ≠ 0 (so l ≥ 1/2); the Q0b terms are dropped at l = 0 only
  const S Q0a = w.O(4 * l + 2) * w.O(4 * l + 4);
  const S Q0b = lpos ? w.O(4 * l) * w.O(4 * l + 2) : S(1);
  auto lo = [&](const S& x) { return lpos ? x : S(0); };
  switch (f) {
    case Family::a:
      return s * w.P(2 * l - i - j) * w.O(2 * l + 2 * j + 2) * w.O(2 * l + 2 * i + 2) / Q0a +
             lo(s * w.P(2 * l + i + j) * w.O(2 * l - 2 * j) * w.O(2 * l - 2 * i) / Q0b) +
             lo(si * w.P(2 * l + i - j + 2) * w.O(2 * l + 2 * j) * w.O(2 * l - 2 * i) / Q0b) +
             si * w.P(2 * l - i + j + 2) * w.O(2 * l - 2 * j + 2) * w.O(2 * l + 2 * i + 2) / Q0a;
    case Family::b:
      return lo(si * w.P(2 * l - i - j + 2) * w.O(2 * l + 2 * j) * w.O(2 * l + 2 * i) / Q0b) +
             si * w.P(2 * l + i + j + 2) * w.O(2 * l - 2 * j + 2) * w.O(2 * l - 2 * i + 2) / Q0a +
             s * w.P(2 * l + i - j) * w.O(2 * l + 2 * j + 2) * w.O(2 * l - 2 * i + 2) / Q0a +
             lo(s * w.P(2 * l - i + j) * w.O(2 * l - 2 * j) * w.O(2 * l + 2 * i) / Q0b);
    case Family::c: {
      const S r1 = w.R(2 * l + 2 * i + 2) * w.R(2 * l - 2 * i);
      return r1 * (s * w.P(3 * l - j + 1) * w.O(2 * l + 2 * j + 2) / Q0a -
                   lo(s * w.P(l + j - 1) * w.O(2 * l - 2 * j) / Q0b) -
                   lo(si * w.P(l - j + 1) * w.O(2 * l + 2 * j) / Q0b) +
                   si * w.P(3 * l + j + 3) * w.O(2 * l - 2 * j + 2) / Q0a);
    }
    case Family::d: {
      const S r1 = w.R(2 * l + 2 * i) * w.R(2 * l - 2 * i + 2);
      return r1 * (lo(si * w.P(3 * l - j + 1) * w.O(2 * l + 2 * j) / Q0b) -
                   si * w.P(l + j + 1) * w.O(2 * l - 2 * j + 2) / Q0a -
                   s * w.P(l - j - 1) * w.O(2 * l + 2 * j + 2) / Q0a +
                   lo(s * w.P(3 * l + j - 1) * w.O(2 * l - 2 * j) / Q0b));
    }
  }
  return S(0);
}

template <class S>
S eval_rescaled(Family f, int k, const Deformation<S>& d, const TPoint<S>& t, HalfInt l, HalfInt i) {
  const HalfInt j = 0;
  const BasisIndex src{l, i, j};
  if (!src.parity_ok()) throw std::invalid_argument("eval_rescaled: parity violation at " + src.str());
  if (k == 0) return eval_t_coeff(f, 0, d, t, l, i, j);
  if (k == -1) {
    if (l < HalfInt(1)) return S(0);
    return guarded_sqrt<S>(m_scalar<S>(d, t.t, l.to_int())) * eval_t_coeff(f, -1, d, t, l, i, j);
  }
  if (k != 1) throw std::invalid_argument("eval_rescaled: band must be -1, 0 or 1");
  const BasisIndex dst{l + HalfInt(1), i + HalfInt(family_di(f)), j};
  if (!src.admissible() || !dst.admissible()) return S(0);

  // m(t,l+1)^{−1/2} x_1 = pre · (1 − |q|^{2t} q^{2l})^{1/2} (|q|^{2t} − q^{2l+4})^{1/2} / |q| · N / D1
  const Powers<S> w{d};
  const S s2 = t.s * t.s;
  const S D1 = w.R(4 * l + 2) * w.O(4 * l + 4) * w.R(4 * l + 6);
  const S fac = guarded_sqrt<S>(S(1) - s2 * w.P(2 * l)) * guarded_sqrt<S>(s2 - w.P(2 * l + 4)) / d.abs_q();
  S pre, N;
  switch (f) {
    case Family::a:
      pre = -t.si * w.P(2 * l + 3);
      N = w.O(2 * l + 2) * w.R(2 * l + 2 * i + 2) * w.R(2 * l - 2 * i + 2);
      break;
    case Family::b:
      pre = t.si * w.P(1);
      N = w.O(2 * l + 2) * w.R(2 * l - 2 * i + 2) * w.R(2 * l + 2 * i + 2);
      break;
    case Family::c:
      pre = t.si * w.P(l - i + 1);
      N = w.O(2 * l + 2) * w.R(2 * l + 2 * i + 2) * w.R(2 * l + 2 * i + 4);
      break;
    case Family::d:
      pre = t.si * w.P(l + i + 1);
      N = w.O(2 * l + 2) * w.R(2 * l - 2 * i + 2) * w.R(2 * l - 2 * i + 4);
      break;
  }
  return pre * fac * N / D1;
}

template double eval_t_coeff<double>(Family, int, const Deformation<double>&, const TPoint<double>&, HalfInt,
                                     HalfInt, HalfInt);
template ExtendedReal eval_t_coeff<ExtendedReal>(Family, int, const Deformation<ExtendedReal>&,
                                                 const TPoint<ExtendedReal>&, HalfInt, HalfInt, HalfInt);
template double eval_rescaled<double>(Family, int, const Deformation<double>&, const TPoint<double>&, HalfInt,
                                      HalfInt);
template ExtendedReal eval_rescaled<ExtendedReal>(Family, int, const Deformation<ExtendedReal>&,
                                                  const TPoint<ExtendedReal>&, HalfInt, HalfInt);

double eval_t_coeff(Family f, int k, const QParam& q, double t, HalfInt l, HalfInt i, HalfInt j) {
  const Deformation<double> d(q);
  return eval_t_coeff<double>(f, k, d, TPoint<double>(d, t), l, i, j);
}

double eval_rescaled(Family f, int k, const QParam& q, double t, HalfInt l, HalfInt i) {
  const Deformation<double> d(q);
  return eval_rescaled<double>(f, k, d, TPoint<double>(d, t), l, i);
}

std::vector<double> t_grid(int points) {
  if (points < 2) throw std::invalid_argument("t-grid needs at least 2 points (both endpoints)");
  std::vector<double> t(static_cast<std::size_t>(points));
  for (int n = 0; n < points; ++n) t[static_cast<std::size_t>(n)] = static_cast<double>(n) / (points - 1);
  t.back() = 1.0;
  return t;
}

BandedOperator pi_t_op(Generator g, const QParam& q, double t, SpacePtr space) {
  if (space->is_full()) throw std::invalid_argument("pi_t_op acts on line-bundle spaces");
  const Deformation<double> d(q);
  const TPoint<double> tp(d, t);
  const Family f = family_of(g);
  const HalfInt di = family_di(f);
  return BandedOperator::build(space, space, HalfInt(1), [&](const BasisIndex& b, auto&& emit) {
    for (int k = -1; k <= 1; ++k)
      emit(BasisIndex{b.l + HalfInt(k), b.i + di, b.j}, eval_t_coeff<double>(f, k, d, tp, b.l, b.i, b.j));
  });
}

GeneratorImages pi_t_images(const QParam& q, double t, SpacePtr space) {
  return {pi_t_op(Generator::alpha, q, t, space), pi_t_op(Generator::gamma, q, t, space),
          pi_t_op(Generator::alpha_star, q, t, space), pi_t_op(Generator::gamma_star, q, t, space)};
}

GeneratorImages build_omega(const QParam& q, double t, HalfInt lmax) {
  const Deformation<double> d(q);
  const TPoint<double> tp(d, t);
  auto space = bundle_space(0, lmax);
  auto make = [&](Generator g) {
    const Family f = family_of(g);
    const HalfInt di = family_di(f);
    return BandedOperator::build(space, space, HalfInt(1), [&](const BasisIndex& b, auto&& emit) {
      for (int k = -1; k <= 1; ++k)
        emit(BasisIndex{b.l + HalfInt(k), b.i + di, b.j}, eval_rescaled<double>(f, k, d, tp, b.l, b.i));
    });
  };
  return {make(Generator::alpha), make(Generator::gamma), make(Generator::alpha_star), make(Generator::gamma_star)};
}

VerificationReport verify_lemma1(const QParam& q, int lmax, int t_points, double tol) {
  q.require_strict("verify_lemma1");
  if (lmax < 1) throw std::invalid_argument("verify_lemma1: lmax must be >= 1");
  const auto grid = t_grid(t_points);
  const Deformation<double> d(q);
  VerificationReport rep("lemma1");
  const std::string star_anchor = anchors::star_compat;

  double r[6] = {0, 0, 0, 0, 0, 0};
  double t1_slice = 0.0;
  for (double t : grid) {
    const TPoint<double> tp(d, t);
    auto X = [&](Family f, int k, int l, int i) { return eval_rescaled<double>(f, k, d, tp, l, i); };
    for (int l = 0; l <= lmax; ++l)
      for (int i = -l; i <= l; ++i) {
        r[0] = std::max(r[0], std::fabs(X(Family::a, 1, l, i) - X(Family::b, -1, l + 1, i)));
        r[1] = std::max(r[1], std::fabs(X(Family::a, 0, l, i) - X(Family::b, 0, l, i)));
        if (l >= 1) r[2] = std::max(r[2], std::fabs(X(Family::a, -1, l, i) - X(Family::b, 1, l - 1, i)));
        r[3] = std::max(r[3], std::fabs(X(Family::c, 1, l, i) - X(Family::d, -1, l + 1, i + 1)));
        r[4] = std::max(r[4], std::fabs(X(Family::c, 0, l, i) - X(Family::d, 0, l, i + 1)));
        if (l >= 1) r[5] = std::max(r[5], std::fabs(X(Family::c, -1, l, i) - X(Family::d, 1, l - 1, i + 1)));
        if (t == 1.0)
          for (Family f : all_families)
            for (int k = -1; k <= 1; ++k)
              t1_slice = std::max(t1_slice, std::fabs(X(f, k, l, i) - eval_t_coeff<double>(f, k, d, tp, l, i, 0)));
      }
  }
  rep.below("A_1(t,l,i) = B_-1(t,l+1,i)", star_anchor, r[0], tol);
  rep.below("A_0(t,l,i) = B_0(t,l,i)", star_anchor, r[1], tol);
  rep.below("A_-1(t,l,i) = B_1(t,l-1,i)", star_anchor, r[2], tol);
  rep.below("C_1(t,l,i) = D_-1(t,l+1,i+1)", star_anchor, r[3], tol);
  rep.below("C_0(t,l,i) = D_0(t,l,i+1)", star_anchor, r[4], tol);
  rep.below("C_-1(t,l,i) = D_1(t,l-1,i+1)", star_anchor, r[5], tol);
  rep.below("t = 1 slice: X_k(1,l,i) = x_k(1,l,i,0)", anchors::t1_collapse, t1_slice,
            std::min(tol, 1e-13));

  double rel = 0.0;
  for (double t : grid) {
    const auto g = build_omega(q, t, lmax);
    for (const auto& res : defining_relation_residuals(g, q.value())) rel = std::max(rel, res.residual);
  }
  rep.below("omega_t satisfies the defining relations on every grid t", anchors::omega_hom, rel, tol);

  // ω_0 is the counit on e^(0)
  const auto g0 = build_omega(q, 0.0, lmax);
  const BasisIndex e0{0, 0, 0};
  double eps = std::fabs(g0.alpha.entry(e0, e0) - 1.0);
  for (const auto& b : g0.alpha.domain()->basis())
    if (!(b == e0)) eps = std::max({eps, std::fabs(g0.alpha.entry(b, e0)), std::fabs(g0.alpha.entry(e0, b)),
                                    std::fabs(g0.gamma.entry(b, e0)), std::fabs(g0.gamma.entry(e0, b))});
  rep.below("omega_0 acts on e(0) by the counit", anchors::omega_counit, eps,
            1e-15);

  // continuity of X_1(t,0,0) under grid refinement
  Json cont = Json::object();
  double prev_jump = 1e300;
  bool shrinking = true;
  for (int n : {11, 101, 1001}) {
    double jump = 0.0;
    const auto tg = t_grid(n);
    for (Family f : all_families) {
      double last = eval_rescaled(f, 1, q, tg[0], 0, 0);
      for (std::size_t m = 1; m < tg.size(); ++m) {
        const double v = eval_rescaled(f, 1, q, tg[m], 0, 0);
        if (!std::isfinite(v)) shrinking = false;
        jump = std::max(jump, std::fabs(v - last));
        last = v;
      }
    }
    cont[std::to_string(n)] = jump;
    if (!(jump < prev_jump)) shrinking = false;
    prev_jump = jump;
  }
  rep.holds("X_1(t,0,0) continuous in t (max grid step shrinks under refinement)",
            anchors::continuity, shrinking);
  rep.results()["continuity_max_step"] = cont;
  rep.parameters()["t_grid"] = t_points;
  return rep;
}

namespace {

const char* gated_names[] = {
    "|a_1(1,l,i,+-1) - A_1(t,l,i)|", "|a_0(1,l,i,+-1)|", "|A_0(t,l,i)|", "|a_-1(1,l,i,+-1) - A_-1(t,l,i)|",
    "|c_1(1,l,i,+-1) - C_1(t,l,i)|", "|c_0(1,l,i,+-1)|", "|C_0(t,l,i)|", "|c_-1(1,l,i,+-1) - C_-1(t,l,i)|",
    "|b_1(1,l,i,+-1) - B_1(t,l,i)|", "|b_0(1,l,i,+-1)|", "|B_0(t,l,i)|", "|b_-1(1,l,i,+-1) - B_-1(t,l,i)|",
    "|d_1(1,l,i,+-1) - D_1(t,l,i)|", "|d_0(1,l,i,+-1)|", "|D_0(t,l,i)|", "|d_-1(1,l,i,+-1) - D_-1(t,l,i)|",
};

template <class S>
DecayTable decay_table_impl(const QParam& q, const std::vector<int>& l_values, int t_points) {
  const Deformation<S> d(q);
  const auto grid = t_grid(t_points);
  std::vector<TPoint<S>> tps;
  for (double t : grid) tps.emplace_back(d, S(t));
  const TPoint<S> one(d, S(1));

  DecayTable table;
  table.l_values = l_values;
  table.families.assign(std::begin(gated_names), std::end(gated_names));
  table.values.assign(table.families.size(), std::vector<double>(l_values.size(), 0.0));
  const Family order[] = {Family::a, Family::c, Family::b, Family::d};

  for (std::size_t n = 0; n < l_values.size(); ++n) {
    const int l = l_values[n];
    if (l < 1) throw std::invalid_argument("decay table needs l >= 1");
    std::vector<S> sup(16, S(0));
    for (int i = -l; i <= l; ++i) {
      for (int fo = 0; fo < 4; ++fo) {
        const Family f = order[fo];
        S x[2][3];  // [j = +1, −1][k + 1]
        for (int js = 0; js < 2; ++js)
          for (int k = -1; k <= 1; ++k) x[js][k + 1] = eval_t_coeff<S>(f, k, d, one, l, i, js == 0 ? 1 : -1);
        S* out = &sup[static_cast<std::size_t>(4 * fo)];
        using std::abs;
        for (int js = 0; js < 2; ++js) out[1] = std::max<S>(out[1], abs(x[js][1]));
        for (const auto& tp : tps) {
          const S X1 = eval_rescaled<S>(f, 1, d, tp, l, i);
          const S X0 = eval_rescaled<S>(f, 0, d, tp, l, i);
          const S Xm = eval_rescaled<S>(f, -1, d, tp, l, i);
          out[2] = std::max<S>(out[2], abs(X0));
          for (int js = 0; js < 2; ++js) {
            out[0] = std::max<S>(out[0], abs(x[js][2] - X1));
            out[3] = std::max<S>(out[3], abs(x[js][0] - Xm));
          }
        }
      }
    }
    for (std::size_t f = 0; f < 16; ++f) table.values[f][n] = static_cast<double>(sup[f]);
  }
  return table;
}

}  // namespace

DecayTable decay_table(const QParam& q, const std::vector<int>& l_values, int t_points, Precision::Mode mode) {
  q.require_strict("decay_table");
  if (!std::is_sorted(l_values.begin(), l_values.end()) ||
      std::adjacent_find(l_values.begin(), l_values.end()) != l_values.end() || l_values.empty())
    throw std::invalid_argument("l_list must be strictly increasing and non-empty");
  return mode == Precision::Mode::extended ? decay_table_impl<ExtendedReal>(q, l_values, t_points)
                                           : decay_table_impl<double>(q, l_values, t_points);
}

VerificationReport verify_lemma2(const QParam& q, const std::vector<int>& l_values, int t_points,
                                 const Precision& precision) {
  precision.validate();
  const auto table = decay_table(q, l_values, t_points, precision.mode);
  VerificationReport rep("lemma2");
  const std::string anchor = anchors::decay;
  std::vector<double> xs(l_values.begin(), l_values.end());
  Json fits = Json::object();
  for (std::size_t f = 0; f < table.families.size(); ++f) {
    const auto& v = table.values[f];
    const bool gated = f < table.gated;
    bool decreasing = true;
    for (std::size_t n = 1; n < v.size(); ++n) decreasing = decreasing && v[n] < v[n - 1];
    const auto fit = log_linear_fit(xs, v);
    Json e;
    e["rate_per_l"] = std::exp(fit.slope);
    e["r_squared"] = fit.r_squared;
    e["final"] = v.back();
    e["strictly_decreasing"] = decreasing;
    e["gated"] = gated;
    fits[table.families[f]] = e;
    for (std::size_t n = 0; n < v.size(); ++n) rep.add_row(l_values[n], table.families[f], v[n]);
    if (!gated) continue;
    rep.holds(table.families[f] + " strictly decreasing in l", anchor, decreasing);
    rep.below(table.families[f] + " at l = " + std::to_string(l_values.back()), anchor, v.back(),
              precision.tol_decay);
    if (v.size() >= 3) rep.above(table.families[f] + " log-linear fit R^2", anchor, fit.r_squared, 0.99);
  }
  rep.results()["fits"] = fits;
  rep.parameters()["l_list"] = l_values;
  rep.parameters()["t_grid"] = t_points;
  rep.parameters()["precision"] = precision.mode == Precision::Mode::extended ? "extended" : "standard";
  rep.assume("b/B and d/D differences are tabulated but not gated; uniform decay is asserted only for a/A and c/C");
  return rep;
}

int endpoint_sign(const QParam& q) {
#ifdef QKK_MUTATE_DROP_SGN
  (void)q;
  return 1;
#else
  return q.sign();
#endif
}

VerificationReport verify_lemma3(const QParam& q, int lmax, double tol) {
  q.require_strict("verify_lemma3");
  if (lmax < 2) throw std::invalid_argument("verify_lemma3: lmax must be >= 2");
  const Deformation<double> d(q);
  const TPoint<double> zero(d, 0.0), one(d, 1.0);
  const int sgn = endpoint_sign(q);
  VerificationReport rep("lemma3");
  const std::string anchor = anchors::endpoint;

  // res[family][k+1], unsigned diagonal, sign on off-diagonal bands
  double res[4][3] = {};
  double unsigned_diag[4] = {};
  double diag_size[4] = {};
  double signed_offdiag[4] = {};
  for (int l = 1; l <= lmax; ++l)
    for (int i = -l; i <= l; ++i)
      for (int j : {1, -1})
        for (Family f : all_families) {
          const int fi = static_cast<int>(f);
          for (int k = -1; k <= 1; ++k) {
            const double X = eval_rescaled<double>(f, k, d, zero, l, i);
            const double x = eval_t_coeff<double>(f, k, d, one, l, i, j);
            const double s = k == 0 ? sgn : 1;
            res[fi][k + 1] = std::max(res[fi][k + 1], std::fabs(X - s * x));
            if (k == 0) {
              unsigned_diag[fi] = std::max(unsigned_diag[fi], std::fabs(X - x));
              diag_size[fi] = std::max(diag_size[fi], 2 * std::fabs(x));
            } else {
              signed_offdiag[fi] = std::max(signed_offdiag[fi], std::fabs(X - q.sign() * x));
            }
          }
        }

  const char* band[] = {"-1", "0", "1"};
  for (Family f : {Family::a, Family::c}) {
    const int fi = static_cast<int>(f);
    for (int k = 1; k >= -1; --k) {
      const std::string X = to_string(f, true) + "_" + band[k + 1] + "(0,l,i)";
      const std::string x = to_string(f) + "_" + band[k + 1] + "(1,l,i,+-1)";
      rep.below(X + " = " + (k == 0 ? "sgn(q) " : "") + x, anchor, res[fi][k + 1], std::min(tol, 1e-12));
    }
  }
  if (q.sign() < 0) {
    for (Family f : {Family::a, Family::c}) {
      const int fi = static_cast<int>(f);
      rep.above("negative control: unsigned " + to_string(f, true) + "_0(0,l,i) = " + to_string(f) +
                    "_0(1,l,i,+-1) fails (residual / max 2|" + to_string(f) + "_0|)",
                anchor, unsigned_diag[fi] / diag_size[fi], 0.5);
    }
  }
  Json extra = Json::object();
  for (Family f : {Family::b, Family::d}) {
    const int fi = static_cast<int>(f);
    for (int k = -1; k <= 1; ++k) extra[to_string(f, true) + "_" + band[k + 1]] = res[fi][k + 1];
  }
  rep.results()["b_d_families"] = extra;
  Json misplaced = Json::object();
  for (Family f : all_families) misplaced[to_string(f, true)] = signed_offdiag[static_cast<int>(f)];
  rep.results()["sgn_on_off_diagonal_bands"] = misplaced;
  rep.results()["sign_used"] = sgn;
  return rep;
}

namespace {

SparseMatrix blocks(const SparseMatrix& a11, const SparseMatrix& a12, const SparseMatrix& a21,
                    const SparseMatrix& a22) {
  const Eigen::Index n = a11.rows(), m = a11.cols();
  std::vector<Eigen::Triplet<double>> trip;
  auto put = [&](const SparseMatrix& a, Eigen::Index r0, Eigen::Index c0) {
    for (Eigen::Index c = 0; c < a.outerSize(); ++c)
      for (SparseMatrix::InnerIterator it(a, c); it; ++it) trip.emplace_back(it.row() + r0, it.col() + c0, it.value());
  };
  put(a11, 0, 0);
  put(a12, 0, m);
  put(a21, n, 0);
  put(a22, n, m);
  SparseMatrix out(2 * n, 2 * m);
  out.setFromTriplets(trip.begin(), trip.end());
  return out;
}

}  // namespace

VerificationReport rotation_homotopy_check(const QParam& q, int t_points, int lmax, int L0, double tol) {
  q.require_strict("rotation_homotopy_check");
  if (q.sign() > 0) throw std::invalid_argument("rotation homotopy requires q < 0");
  if (!(L0 < lmax - 1) || L0 < 1) throw std::invalid_argument("rotation homotopy requires 1 <= L0 < lmax - 1");
  const auto grid = t_grid(t_points);
  VerificationReport rep("rotation");
  const std::string anchor = anchors::rotation;

  auto module = make_fredholm_module(0, -2, lmax);
  auto minus = module.minus_space;
  const auto w0 = build_omega(q, 0.0, lmax);
  const auto w1 = pi_t_images(q, 1.0, minus);
  const BandedOperator* W0src[] = {&w0.alpha, &w0.gamma, &w0.alpha_star, &w0.gamma_star};
  const BandedOperator* W1[] = {&w1.alpha, &w1.gamma, &w1.alpha_star, &w1.gamma_star};
  const char* names[] = {"alpha", "gamma", "alpha*", "gamma*"};

  auto tail_mask = interior_mask(*minus, HalfInt(1));
  for (std::size_t n = 0; n < minus->dim(); ++n)
    if (minus->at(n).l < HalfInt(L0)) tail_mask[n] = 0;
  std::vector<char> mask2(tail_mask);
  mask2.insert(mask2.end(), tail_mask.begin(), tail_mask.end());

  const auto nmin = static_cast<Eigen::Index>(minus->dim());
  SparseMatrix I(nmin, nmin), Z(nmin, nmin);
  I.setIdentity();
  const SparseMatrix swap = blocks(Z, I, I, Z);

  double worst_excess = -1e300, max_tail = 0.0, endpoint0 = 0.0, endpoint1 = 0.0, ref_max = 0.0;
  Json per_x = Json::object();
  for (int x = 0; x < 4; ++x) {
    // ω_0 transported to H_{−2} through F₊ (identifies ℂ^⊥ ⊂ H_0 with H_{−2})
    const SparseMatrix W0 = (module.F_plus * *W0src[x] * module.F_minus).matrix();
    const SparseMatrix& W = W1[x]->matrix();
    const SparseMatrix delta = W0 - W;
    const double ref = operator_norm(delta, &tail_mask);
    ref_max = std::max(ref_max, ref);
    const SparseMatrix theta_minus = blocks(W, Z, Z, W);
    Json tails = Json::array();
    for (double t : grid) {
      const double c = t == 1.0 ? 0.0 : std::cos(std::numbers::pi * t / 2);
      const double s = t == 1.0 ? 1.0 : std::sin(std::numbers::pi * t / 2);
      const SparseMatrix T11 = c * c * W0 + s * s * W;
      const SparseMatrix T12 = c * s * (W - W0);
      const SparseMatrix T22 = s * s * W0 + c * c * W;
      const SparseMatrix theta_plus = blocks(T11, T12, T12, T22);
      if (t == 0.0) endpoint0 = std::max(endpoint0, operator_norm(SparseMatrix(theta_plus - blocks(W0, Z, Z, W))));
      if (t == 1.0) endpoint1 = std::max(endpoint1, operator_norm(SparseMatrix(theta_plus - blocks(W, Z, Z, W0))));
      // odd operator G = [[0, swap], [swap, 0]]; [G, Θ₊ ⊕ Θ₋] has off-diagonal blocks
      const SparseMatrix upper = swap * theta_minus - theta_plus * swap;
      const SparseMatrix lower = swap * theta_plus - theta_minus * swap;
      const double tail = std::max(operator_norm(upper, &mask2), operator_norm(lower, &mask2));
      tails.push_back(tail);
      max_tail = std::max(max_tail, tail);
      worst_excess = std::max(worst_excess, tail - ref);
    }
    per_x[names[x]] = {{"reference_tail", ref}, {"tails", tails}};
  }
  rep.below("max over t and x of tail - reference tail", anchor, worst_excess, tol);
  rep.equal("t = 0: Theta_+ = diag(omega_0, omega) exactly", anchor, endpoint0, 0.0);
  rep.equal("t = 1: Theta_+ = diag(omega, omega_0) exactly", anchor, endpoint1, 0.0);
  rep.results()["max_tail"] = max_tail;
  rep.results()["reference_tail_max"] = ref_max;
  rep.results()["u1_convention"] = "swap (U(1) conjugation exchanges the blocks without sign)";
  rep.results()["per_generator"] = per_x;
  rep.parameters()["t_grid"] = t_points;
  rep.parameters()["L0"] = L0;
  return rep;
}

VerificationReport degenerate_module_check(const QParam& q, int lmax, double tol) {
  q.require_strict("degenerate_module_check");
  if (lmax < 2) throw std::invalid_argument("degenerate_module_check: lmax must be >= 2");
  VerificationReport rep("degenerate");
  const char* names[] = {"alpha", "gamma", "alpha*", "gamma*"};

  // (i) F intertwines the t = 1 actions on H_1 and H_{−1}
  auto D = dirac_module(lmax);
  const auto p1 = pi_t_images(q, 1.0, D.plus_space);
  const auto m1 = pi_t_images(q, 1.0, D.minus_space);
  const BandedOperator* P[] = {&p1.alpha, &p1.gamma, &p1.alpha_star, &p1.gamma_star};
  const BandedOperator* M[] = {&m1.alpha, &m1.gamma, &m1.alpha_star, &m1.gamma_star};
  double r1 = 0.0;
  for (int x = 0; x < 4; ++x) r1 = std::max(r1, interior_norm(D.F_plus * *P[x] - *M[x] * D.F_plus));
  rep.below("F intertwines the t = 1 actions on H_1 and H_-1 (j-symmetry)",
            anchors::j_symmetry, r1, std::min(tol, 1e-12));

  // (ii) F₊ ω_0 = ω F₊ on ℂ^⊥ ⊂ H_0
  auto E = make_fredholm_module(0, -2, lmax);
  const auto w0 = build_omega(q, 0.0, lmax);
  const auto w1 = pi_t_images(q, 1.0, E.minus_space);
  const BandedOperator* A0[] = {&w0.alpha, &w0.gamma, &w0.alpha_star, &w0.gamma_star};
  const BandedOperator* A1[] = {&w1.alpha, &w1.gamma, &w1.alpha_star, &w1.gamma_star};
  auto cols = interior_mask(*E.plus_space, HalfInt(1));
  cols[0] = 0;  // e^(0)_{0,0}
  double r2 = 0.0;
  Json per = Json::object();
  for (int x = 0; x < 4; ++x) {
    const double v = operator_norm((E.F_plus * *A0[x] - *A1[x] * E.F_plus).matrix(), &cols);
    per[names[x]] = v;
    r2 = std::max(r2, v);
  }
  // with the diagonal bands of ω sign-twisted the intertwining holds for every q
  double r3 = 0.0;
  for (int x = 0; x < 4; ++x) {
    const Family f = family_of(static_cast<Generator>(x));
    const Deformation<double> d(q);
    const TPoint<double> one(d, 1.0);
    const HalfInt di = family_di(f);
    auto twisted = BandedOperator::build(E.minus_space, E.minus_space, HalfInt(1), [&](const BasisIndex& b, auto&& emit) {
      for (int k = -1; k <= 1; ++k)
        emit(BasisIndex{b.l + HalfInt(k), b.i + di, b.j},
             (k == 0 ? q.sign() : 1) * eval_t_coeff<double>(f, k, d, one, b.l, b.i, b.j));
    });
    r3 = std::max(r3, operator_norm((E.F_plus * *A0[x] - twisted * E.F_plus).matrix(), &cols));
  }
  const std::string anchor2 = anchors::degenerate_h0;
  if (q.sign() > 0) {
    rep.below("F+ intertwines omega_0 on C-perp with omega on H_-2", anchor2, r2, std::min(tol, 1e-12));
  } else {
    rep.above("negative control: F+ does not intertwine omega_0 with omega for q < 0", anchor2, r2, 1e-6);
    rep.below("F+ intertwines omega_0 with sgn(q)-twisted diagonal of omega", anchor2, r3, std::min(tol, 1e-12));
  }
  rep.results()["intertwining_residual_per_generator"] = per;
  rep.results()["twisted_residual"] = r3;
  return rep;
}

}  // namespace qkk
