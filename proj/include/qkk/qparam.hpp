#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "qkk/halfint.hpp"

namespace qkk {

/// Deformation parameter q ∈ [−1, 1] \ {0}.
class QParam {
public:
  explicit QParam(double q) : q_(q) {
    if (!(q >= -1.0 && q <= 1.0) || q == 0.0)
      throw std::invalid_argument("q must lie in [-1,1] \\ {0}, got " + std::to_string(q));
  }

  double value() const { return q_; }
  double abs() const { return std::fabs(q_); }
  int sign() const { return q_ > 0 ? 1 : -1; }
  bool is_strict() const { return std::fabs(q_) < 1.0; }

  /// Operator modules need |q| < 1.
  void require_strict(const char* where) const {
    if (!is_strict())
      throw std::invalid_argument(std::string(where) + " requires |q| < 1, got q = " + std::to_string(q_));
  }

private:
  double q_;
};

struct Precision {
  enum class Mode { standard, extended };
  Mode mode = Mode::standard;
  double tol_identity = 1e-10;
  double tol_decay = 1e-8;

  void validate() const {
    if (!(tol_identity > 0) || !(tol_decay > 0))
      throw std::invalid_argument("tolerances must be positive");
  }
};

/// √max(x, 0), rejecting radicands below −tol.
template <class Scalar>
Scalar guarded_sqrt(const Scalar& x, double tol = 1e-10) {
  using std::sqrt;
  if (x < -Scalar(tol))
    throw std::domain_error("negative radicand " + std::to_string(static_cast<double>(x)));
  if (x <= Scalar(0)) return Scalar(0);
  return sqrt(x);
}

/// q carried in the working scalar type, with integer-exponent powers.
template <class Scalar>
class Deformation {
public:
  explicit Deformation(const QParam& q) : q_(q.value()), abs_q_(q.abs()), sign_(q.sign()) {
    q.require_strict("Deformation");
  }

  const Scalar& q() const { return q_; }
  const Scalar& abs_q() const { return abs_q_; }
  int sign() const { return sign_; }

  /// q^n by binary exponentiation (exact for the signs of negative q).
  Scalar pow(int n) const {
    Scalar base = n >= 0 ? q_ : Scalar(1) / q_;
    unsigned e = static_cast<unsigned>(n >= 0 ? n : -n);
    Scalar acc(1);
    while (e) {
      if (e & 1u) acc *= base;
      base *= base;
      e >>= 1u;
    }
    return acc;
  }
  Scalar pow(HalfInt n) const { return pow(n.to_int()); }

  /// |q|^t for real t.
  Scalar abs_pow(const Scalar& t) const {
    using std::pow;
    return pow(abs_q_, t);
  }

private:
  Scalar q_;
  Scalar abs_q_;
  int sign_;
};

/// [a] = (q^a − q^{−a}) / (q − q^{−1}).
template <class Scalar = double>
Scalar qnumber(const QParam& q, int a) {
  if (!q.is_strict()) throw std::invalid_argument("qnumber requires |q| < 1");
  Deformation<Scalar> d(q);
  if (a == 0) return Scalar(0);
  if (a < 0) return -qnumber<Scalar>(q, -a);
  return (d.pow(a) - d.pow(-a)) / (d.q() - Scalar(1) / d.q());
}

/// m(t,l) = (q² − |q|^{2t} q^{2l}) / (|q|^{2t} − q^{2l+2}), l ≥ 1.
template <class Scalar = double>
Scalar m_scalar(const Deformation<Scalar>& d, const Scalar& t, int l) {
  if (t < Scalar(0) || t > Scalar(1)) throw std::invalid_argument("m_scalar: t outside [0,1]");
  if (l <= 0) {
    if (l == 0 && t == Scalar(1)) return Scalar(1);
    throw std::invalid_argument("m_scalar: l must be >= 1 (l = 0 only at t = 1)");
  }
  const Scalar s2 = d.abs_pow(2 * t);
  return (d.pow(2) - s2 * d.pow(2 * l)) / (s2 - d.pow(2 * l + 2));
}

inline double m_scalar(const QParam& q, double t, int l) {
  return m_scalar<double>(Deformation<double>(q), t, l);
}

}  // namespace qkk
