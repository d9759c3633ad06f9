#include "qkk/foq.hpp"

#include <cmath>
#include <complex>

namespace qkk {

QMatrix validate_q(const ComplexMatrix& entries, double tol) {
  if (entries.rows() != entries.cols() || entries.rows() < 1)
    throw std::invalid_argument("Q must be a nonempty square matrix");
  if (!(tol > 0)) throw std::invalid_argument("validation tolerance must be positive");
  if (!entries.allFinite()) throw QMatrixError("singular");
  const Eigen::JacobiSVD<ComplexMatrix> svd(entries);
  if (!(svd.singularValues().minCoeff() > tol)) throw QMatrixError("singular");

  const ComplexMatrix P = entries * entries.conjugate();
  const auto I = ComplexMatrix::Identity(entries.rows(), entries.cols());
  if ((P - I).cwiseAbs().maxCoeff() <= tol) return QMatrix(entries, 1, tol);
  if ((P + I).cwiseAbs().maxCoeff() <= tol) return QMatrix(entries, -1, tol);
  throw QMatrixError("not scalar");
}

EquivalenceInvariant invariant_pair(const QMatrix& Q) {
  return {Q.sign(), Q.entries().squaredNorm()};
}

bool monoidally_equivalent(const QMatrix& a, const QMatrix& b, double tol) {
  const auto ia = invariant_pair(a), ib = invariant_pair(b);
  return ia.sign == ib.sign && std::fabs(ia.trace - ib.trace) < tol;
}

double solve_su2_parameter(const QMatrix& Q) {
  double tau = invariant_pair(Q).trace;
  if (tau < 2.0 - Q.tol()) throw std::domain_error("tr(Q*Q) < 2 is impossible for a valid Q");
  tau = std::max(tau, 2.0);
  // smaller root of x² − τx + 1, written without cancellation
  const double abs_q = 2.0 / (tau + std::sqrt(tau * tau - 4.0));
  return -Q.sign() * abs_q;
}

QMatrix canonical_su2_qmatrix(double q) {
  const QParam p(q);
  const double norm = 1.0 / std::sqrt(p.abs());
  ComplexMatrix m(2, 2);
  m << 0.0, -q * norm, norm, 0.0;
  return validate_q(m);
}

QMatrix random_valid_qmatrix(std::mt19937_64& rng, int n, int sign, double max_log_s) {
  if (n < 2) throw std::invalid_argument("random_valid_qmatrix: n must be >= 2");
  if (sign != 1 && sign != -1) throw std::invalid_argument("random_valid_qmatrix: sign must be +1 or -1");
  if (sign == -1 && n % 2) throw std::invalid_argument("Q conj(Q) = -1 needs even n");
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> logs(-max_log_s, max_log_s), phase(0.0, 2 * M_PI);

  ComplexMatrix G(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) G(r, c) = {gauss(rng), gauss(rng)};
  const Eigen::HouseholderQR<ComplexMatrix> qr(G);
  ComplexMatrix U = qr.householderQ();
  const ComplexMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) U.col(k) *= std::polar(1.0, std::arg(R(k, k)));

  ComplexMatrix B = ComplexMatrix::Zero(n, n);
  Eigen::Index k = 0;
  for (; k + 1 < n; k += 2) {
    const double s = std::exp(logs(rng));
    B(k, k + 1) = s;
    B(k + 1, k) = sign / s;
  }
  if (k < n) B(k, k) = std::polar(1.0, phase(rng));
  return validate_q(U * B * U.transpose());
}

}  // namespace qkk
