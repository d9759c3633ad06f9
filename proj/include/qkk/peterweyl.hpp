#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "qkk/banded_operator.hpp"
#include "qkk/qparam.hpp"

namespace qkk {

enum class RegSymbol { a_plus, a_minus, c_plus, c_minus };

/// Target of the shift carried by a regular-representation coefficient.
inline BasisIndex reg_target(RegSymbol s, const BasisIndex& b) {
  switch (s) {
    case RegSymbol::a_plus: return {b.l + half, b.i - half, b.j - half};
    case RegSymbol::a_minus: return {b.l - half, b.i - half, b.j - half};
    case RegSymbol::c_plus: return {b.l + half, b.i + half, b.j - half};
    case RegSymbol::c_minus: return {b.l - half, b.i + half, b.j - half};
  }
  return b;
}

/// a±(l,i,j), c±(l,i,j); zero when source or target is not a basis vector.
template <class S>
S coeff_reg(RegSymbol sym, const Deformation<S>& d, HalfInt l, HalfInt i, HalfInt j) {
  const BasisIndex src{l, i, j};
  if (!src.parity_ok()) throw std::invalid_argument("coeff_reg: parity violation at " + src.str());
  if (!src.admissible() || !reg_target(sym, src).admissible()) return S(0);
  const int L = (2 * l).to_int(), I = (2 * i).to_int(), J = (2 * j).to_int();
  auto p = [&](int e) { return d.pow(e); };
  auto r = [&](int e) { return guarded_sqrt<S>(S(1) - p(e)); };
  switch (sym) {
    case RegSymbol::a_plus:
      return p((2 * l + i + j).to_int() + 1) * r(L - J + 2) * r(L - I + 2) / (r(2 * L + 2) * r(2 * L + 4));
    case RegSymbol::a_minus:
      return r(L + J) * r(L + I) / (r(2 * L) * r(2 * L + 2));
    case RegSymbol::c_plus:
      return -p((l + j).to_int()) * r(L - J + 2) * r(L + I + 2) / (r(2 * L + 2) * r(2 * L + 4));
    case RegSymbol::c_minus:
      return p((l + i).to_int()) * r(L + J) * r(L - I) / (r(2 * L) * r(2 * L + 2));
  }
  return S(0);
}

double coeff_reg(RegSymbol sym, const QParam& q, HalfInt l, HalfInt i, HalfInt j);

enum class Generator { alpha, gamma, alpha_star, gamma_star };

std::string to_string(Generator g);
Generator star(Generator g);
/// Change of the line-bundle winding k (Δj = dk/2).
int winding_shift(Generator g);

/// Image of a basis vector: emit(target, coefficient) for the (at most two) components.
template <class Emit>
void generator_images(Generator g, const Deformation<double>& d, const BasisIndex& b, Emit&& emit) {
  const HalfInt l = b.l, i = b.i, j = b.j;
  switch (g) {
    case Generator::alpha:
      emit(BasisIndex{l + half, i - half, j - half}, coeff_reg(RegSymbol::a_plus, d, l, i, j));
      emit(BasisIndex{l - half, i - half, j - half}, coeff_reg(RegSymbol::a_minus, d, l, i, j));
      break;
    case Generator::gamma:
      emit(BasisIndex{l + half, i + half, j - half}, coeff_reg(RegSymbol::c_plus, d, l, i, j));
      emit(BasisIndex{l - half, i + half, j - half}, coeff_reg(RegSymbol::c_minus, d, l, i, j));
      break;
    case Generator::alpha_star:
      if (l >= half) emit(BasisIndex{l - half, i + half, j + half}, coeff_reg(RegSymbol::a_plus, d, l - half, i + half, j + half));
      emit(BasisIndex{l + half, i + half, j + half}, coeff_reg(RegSymbol::a_minus, d, l + half, i + half, j + half));
      break;
    case Generator::gamma_star:
      if (l >= half) emit(BasisIndex{l - half, i - half, j + half}, coeff_reg(RegSymbol::c_plus, d, l - half, i - half, j + half));
      emit(BasisIndex{l + half, i - half, j + half}, coeff_reg(RegSymbol::c_minus, d, l + half, i - half, j + half));
      break;
  }
}

/// Left multiplication by a generator. A bundle domain L²(E_k) maps into
/// L²(E_{k+winding_shift(g)}); a full domain maps into itself.
BandedOperator generator_op(Generator g, const QParam& q, SpacePtr domain);

/// Images of α, γ, α*, γ* on a common space (used for relation checks on
/// any representation: regular, π_t, ω_t).
struct GeneratorImages {
  BandedOperator alpha, gamma, alpha_star, gamma_star;
};

GeneratorImages regular_images(const QParam& q, HalfInt lmax);

struct RelationResidual {
  std::string name;
  double residual;
};

/// Interior operator-norm residuals of
///   αγ − qγα, αγ* − qγ*α, γγ* − γ*γ, α*α + γ*γ − 1, αα* + q²γγ* − 1,
/// plus the adjoint pairs α* − (α)ᵀ and γ* − (γ)ᵀ.
std::vector<RelationResidual> defining_relation_residuals(const GeneratorImages& g, double q);

/// max |⟨x* ξ, η⟩ − ⟨ξ, x η⟩| over interior basis pairs, x ∈ {α, γ}.
double adjoint_consistency(const QParam& q, HalfInt lmax);

/// Finitely supported vector with complex amplitudes.
struct StateVector {
  std::map<BasisIndex, std::complex<double>> amplitudes;

  static StateVector basis_vector(const BasisIndex& b);
  std::complex<double> operator[](const BasisIndex& b) const;
  void add(const BasisIndex& b, std::complex<double> value);
  /// Sup norm over amplitudes.
  double max_abs() const;
  friend StateVector operator-(const StateVector& a, const StateVector& b);
};

/// Antilinear involution e^(l)_{i,j} ↦ (−1)^{2l+i+j} q^{i+j} e^(l)_{−i,−j}.
StateVector involution(const StateVector& v, const QParam& q);

/// Untruncated action of a generator on a finitely supported vector.
StateVector apply(Generator g, const QParam& q, const StateVector& v);

/// φ(x₁⋯x_n) = ⟨e^(0)_{0,0}, x₁⋯x_n e^(0)_{0,0}⟩, checked against the truncation lmax.
std::complex<double> haar_state(const std::vector<Generator>& word, const QParam& q, HalfInt lmax);

/// Spin-l component.
StateVector spectral_project(const StateVector& v, HalfInt l);

/// [2l+1].
double quantum_dimension(const QParam& q, HalfInt l);

}  // namespace qkk
