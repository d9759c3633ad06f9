#pragma once

#include <Eigen/SparseCore>

#include <memory>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "qkk/basis.hpp"

namespace qkk {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::ColMajor>;
using SpacePtr = std::shared_ptr<const TruncatedSpace>;

inline SpacePtr full_space(HalfInt lmax) { return std::make_shared<const TruncatedSpace>(TruncatedSpace::full(lmax)); }
inline SpacePtr bundle_space(int k, HalfInt lmax) {
  return std::make_shared<const TruncatedSpace>(TruncatedSpace::bundle(k, lmax));
}

/// Shift (Δl, Δi, Δj) of a stored matrix entry.
using Shift = std::tuple<HalfInt, HalfInt, HalfInt>;

/// Real operator between truncations, with bounded reach in the spin label.
///
/// interior_margin is the largest |Δl| the untruncated operator can produce;
/// on vectors supported in l ≤ lmax − interior_margin the truncation is exact.
class BandedOperator {
public:
  BandedOperator(SpacePtr domain, SpacePtr codomain, SparseMatrix matrix, HalfInt interior_margin);

  /// Assembles the operator column by column. `rule(source, emit)` calls
  /// `emit(target, coefficient)` for each image component; targets outside the
  /// codomain truncation are dropped.
  template <class Rule>
  static BandedOperator build(SpacePtr domain, SpacePtr codomain, HalfInt margin, Rule&& rule) {
    std::vector<Eigen::Triplet<double>> entries;
    entries.reserve(domain->dim() * 3);
    for (std::size_t col = 0; col < domain->dim(); ++col) {
      rule(domain->at(col), [&](const BasisIndex& target, double value) {
        if (value == 0.0) return;
        if (auto row = codomain->find(target))
          entries.emplace_back(static_cast<int>(*row), static_cast<int>(col), value);
      });
    }
    SparseMatrix m(static_cast<Eigen::Index>(codomain->dim()), static_cast<Eigen::Index>(domain->dim()));
    m.setFromTriplets(entries.begin(), entries.end());
    return BandedOperator(std::move(domain), std::move(codomain), std::move(m), margin);
  }

  static BandedOperator identity(SpacePtr space);
  static BandedOperator zero(SpacePtr domain, SpacePtr codomain);

  const SpacePtr& domain() const { return domain_; }
  const SpacePtr& codomain() const { return codomain_; }
  const SparseMatrix& matrix() const { return matrix_; }
  HalfInt interior_margin() const { return margin_; }

  /// Transpose (real coefficients), i.e. the Hilbert-space adjoint.
  BandedOperator adjoint() const;

  double entry(const BasisIndex& row, const BasisIndex& col) const;

  /// Columns supported on l ≤ lmax − interior_margin.
  std::vector<char> interior_columns() const;
  /// Interior columns with additionally l ≥ l_from.
  std::vector<char> tail_columns(HalfInt l_from) const;

  /// Distinct shifts among entries with |value| > cutoff.
  std::set<Shift> shifts(double cutoff = 0.0) const;

  Eigen::VectorXd apply(const Eigen::VectorXd& v) const { return matrix_ * v; }

  friend BandedOperator operator*(const BandedOperator& a, const BandedOperator& b);
  friend BandedOperator operator+(const BandedOperator& a, const BandedOperator& b);
  friend BandedOperator operator-(const BandedOperator& a, const BandedOperator& b);
  friend BandedOperator operator*(double s, const BandedOperator& a);

private:
  SpacePtr domain_;
  SpacePtr codomain_;
  SparseMatrix matrix_;
  HalfInt margin_;
};

/// Column mask over a space: l ≤ lmax − margin.
std::vector<char> interior_mask(const TruncatedSpace& space, HalfInt margin);

}  // namespace qkk
