#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "qkk/qparam.hpp"
#include "qkk/report.hpp"

namespace qkk {

using ComplexMatrix = Eigen::MatrixXcd;

/// Rejection from validate_q; what() is "not scalar" or "singular".
class QMatrixError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Invertible Q with Q·conj(Q) = c·1, c = ±1.
class QMatrix {
public:
  Eigen::Index n() const { return entries_.rows(); }
  const ComplexMatrix& entries() const { return entries_; }
  int sign() const { return sign_; }
  double tol() const { return tol_; }

private:
  QMatrix(ComplexMatrix e, int sign, double tol) : entries_(std::move(e)), sign_(sign), tol_(tol) {}
  friend QMatrix validate_q(const ComplexMatrix&, double);

  ComplexMatrix entries_;
  int sign_;
  double tol_;
};

QMatrix validate_q(const ComplexMatrix& entries, double tol = 1e-10);

struct EquivalenceInvariant {
  int sign = 1;
  double trace = 0.0;  // tr(Q*Q)
};

EquivalenceInvariant invariant_pair(const QMatrix& Q);

/// Same sign and |Δ trace| < tol.
bool monoidally_equivalent(const QMatrix& a, const QMatrix& b, double tol = 1e-10);

/// The q ∈ [−1,1] \ {0} with |q| + |q|^{−1} = tr(Q*Q) and sgn(q) = −c.
double solve_su2_parameter(const QMatrix& Q);

/// |q|^{−1/2} [[0, −q], [1, 0]].
QMatrix canonical_su2_qmatrix(double q);

/// U·B·Uᵀ with U Haar-unitary and B block diagonal with 2×2 blocks
/// [[0, s], [c/s, 0]] (plus unit-modulus 1×1 entries when c = +1 and n is odd).
QMatrix random_valid_qmatrix(std::mt19937_64& rng, int n, int sign, double max_log_s = 1.0);

}  // namespace qkk
