#pragma once

#include <cstddef>
#include <vector>

#include "qkk/peterweyl.hpp"
#include "qkk/report.hpp"

namespace qkk {

enum class PodlesKind { A, B, B_star };

std::string to_string(PodlesKind k);

/// Three-term table of A = γ*γ (Δi = 0) or B = α*γ (Δi = +1) on e^(l)_{i,j}.
/// Returns the coefficient of e^(l+dl)_{i+di, j}, dl ∈ {−1, 0, 1}; zero when
/// the source or target is not a basis vector.
template <class S>
S podles_coeff(PodlesKind which, const Deformation<S>& d, HalfInt l, HalfInt i, HalfInt j, int dl);

double podles_coeff(PodlesKind which, const QParam& q, HalfInt l, HalfInt i, HalfInt j, int dl);

/// Materialized table on a space (full or bundle; j is preserved). B* is the transpose of B.
BandedOperator podles_op(PodlesKind which, const QParam& q, SpacePtr space);

/// A, B, B* relations and agreement with the generator composites, on the
/// full truncation up to lmax.
VerificationReport check_podles_relations(const QParam& q, HalfInt lmax, double tol_identity = 1e-10);

/// Graded pair (L²(E_a), L²(E_b)) with F₊ identifying e^(l)_{i,a/2} with e^(l)_{i,b/2}
/// whenever the latter exists, and F₋ = F₊ᵀ.
struct FredholmModule {
  SpacePtr plus_space;
  SpacePtr minus_space;
  BandedOperator F_plus;
  BandedOperator F_minus;

  HalfInt lmax() const { return plus_space->lmax(); }
  /// max(‖F₋F₊ − 1‖, ‖F₊F₋ − 1‖, ‖F₋ − F₊ᵀ‖).
  double unitarity_residual() const;
};

FredholmModule make_fredholm_module(int k_plus, int k_minus, HalfInt lmax);
/// The (E_1, E_{−1}) module.
inline FredholmModule dirac_module(HalfInt lmax) { return make_fredholm_module(1, -1, lmax); }

/// Norm of [F, x_+ ⊕ x_−] on interior spins ≥ L0; x_± act on plus/minus spaces.
double commutator_tail(const FredholmModule& F, const BandedOperator& x_plus, const BandedOperator& x_minus,
                       HalfInt L0);
/// x ∈ {A, B, B*} acting on both sectors.
double commutator_tail(const FredholmModule& F, PodlesKind x, const QParam& q, HalfInt L0);
/// Word in the generators with zero total winding, e.g. γ*γ.
double commutator_tail(const FredholmModule& F, const std::vector<Generator>& word, const QParam& q, HalfInt L0);

/// Product x₁⋯x_n as an operator on L²(E_k) (or the full space).
BandedOperator word_op(const std::vector<Generator>& word, const QParam& q, SpacePtr domain);

struct IndexResult {
  long index = 0;
  std::size_t kernel = 0;
  std::size_t cokernel = 0;
  std::size_t rank = 0;
  double smallest_kept = 0.0;
  double largest_dropped = 0.0;
};

/// dim ker − dim coker with singular-value threshold; throws when the rank
/// decision is ill-conditioned.
IndexResult fredholm_index(const BandedOperator& map, double threshold = 1e-8);

struct FitResult {
  double slope = 0.0;      // per unit of the abscissa, in log space
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points = 0;
};

/// Least-squares fit of log(y) against x over entries with y > floor.
FitResult log_linear_fit(const std::vector<double>& x, const std::vector<double>& y, double floor = 0.0);

}  // namespace qkk
