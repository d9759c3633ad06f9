#pragma once

#include <array>
#include <string>
#include <vector>

#include "qkk/peterweyl.hpp"
#include "qkk/report.hpp"

namespace qkk {

/// Coefficient families of π_t(α), π_t(α*), π_t(γ), π_t(γ*).
enum class Family { a, b, c, d };

inline constexpr std::array<Family, 4> all_families{Family::a, Family::b, Family::c, Family::d};

std::string to_string(Family f, bool rescaled = false);
Generator generator_of(Family f);
Family family_of(Generator g);
/// Weight shift Δi of a family: 0, 0, +1, −1.
inline int family_di(Family f) { return f == Family::c ? 1 : f == Family::d ? -1 : 0; }

/// t together with |q|^t and |q|^{−t}, evaluated once.
template <class S>
struct TPoint {
  S t, s, si;
  TPoint(const Deformation<S>& d, const S& tt) : t(tt), s(d.abs_pow(tt)), si(S(1) / s) {}
};

/// x_k(t,l,i,j): coefficient of e^(l+k)_{i+Δi, j} in π_t(x) e^(l)_{i,j}. Zero when
/// source or target is not a basis vector; diagonal entries at j = 0 use the
/// grouped (manifestly finite) forms.
template <class S>
S eval_t_coeff(Family f, int k, const Deformation<S>& d, const TPoint<S>& t, HalfInt l, HalfInt i, HalfInt j);
double eval_t_coeff(Family f, int k, const QParam& q, double t, HalfInt l, HalfInt i, HalfInt j);

/// X_k(t,l,i) on L²(E_0): X_1 = m(t,l+1)^{−1/2} x_1, X_0 = x_0, X_{−1} = m(t,l)^{1/2} x_{−1},
/// with the X_1 prefactor cancelled analytically (finite at t = l = 0).
template <class S>
S eval_rescaled(Family f, int k, const Deformation<S>& d, const TPoint<S>& t, HalfInt l, HalfInt i);
double eval_rescaled(Family f, int k, const QParam& q, double t, HalfInt l, HalfInt i);

/// t-grid with exact endpoints 0 and 1.
std::vector<double> t_grid(int points);

/// π_t(g) on L²(E_k) (space must be a bundle).
BandedOperator pi_t_op(Generator g, const QParam& q, double t, SpacePtr space);
GeneratorImages pi_t_images(const QParam& q, double t, SpacePtr space);

/// ω_t(α), ω_t(γ), ω_t(α*), ω_t(γ*) on L²(E_0) up to lmax.
GeneratorImages build_omega(const QParam& q, double t, HalfInt lmax);

/// Star-compatibility identities of the rescaled tables, t = 1 reduction,
/// and the defining relations for ω_t on every grid point.
VerificationReport verify_lemma1(const QParam& q, int lmax, int t_points, double tol_identity = 1e-10);

/// Sup over the t-grid and admissible i of each difference family at each l.
struct DecayTable {
  std::vector<int> l_values;
  std::vector<std::string> families;           // gated families first
  std::vector<std::vector<double>> values;     // values[family][l-index]
  std::size_t gated = 8;
};

DecayTable decay_table(const QParam& q, const std::vector<int>& l_values, int t_points,
                       Precision::Mode mode = Precision::Mode::extended);

VerificationReport verify_lemma2(const QParam& q, const std::vector<int>& l_values, int t_points,
                                 const Precision& precision);

/// Sign used on the diagonal (k = 0) families of the t = 0 endpoint identities.
int endpoint_sign(const QParam& q);

/// t = 0 endpoint identities for 1 ≤ l ≤ lmax, with the unsigned negative control for q < 0.
VerificationReport verify_lemma3(const QParam& q, int lmax, double tol_identity = 1e-10);

/// Rotation homotopy on (H_{−2} ⊕ H_{−2}) ⊕ (H_{−2} ⊕ H_{−2}); requires q < 0.
VerificationReport rotation_homotopy_check(const QParam& q, int t_points, int lmax, int L0,
                                           double tol_identity = 1e-10);

/// Degeneracy of the (H_1, H_{−1}) module at t = 1 and, for q > 0, of the
/// (H_0 ⊖ ℂe^(0), H_{−2}) module.
VerificationReport degenerate_module_check(const QParam& q, int lmax, double tol_identity = 1e-10);

}  // namespace qkk
