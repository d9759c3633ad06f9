#include "qkk/banded_operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qkk {

namespace {

void require_same(const SpacePtr& a, const SpacePtr& b, const char* what) {
  if (a != b && !(*a == *b)) throw std::invalid_argument(std::string(what) + ": incompatible spaces " +
                                                         a->describe() + " vs " + b->describe());
}

}  // namespace

BandedOperator::BandedOperator(SpacePtr domain, SpacePtr codomain, SparseMatrix matrix, HalfInt interior_margin)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)), margin_(interior_margin) {
  if (matrix_.rows() != static_cast<Eigen::Index>(codomain_->dim()) ||
      matrix_.cols() != static_cast<Eigen::Index>(domain_->dim()))
    throw std::invalid_argument("BandedOperator: matrix shape does not match spaces");
  matrix_.makeCompressed();
}

BandedOperator BandedOperator::identity(SpacePtr space) {
  SparseMatrix m(static_cast<Eigen::Index>(space->dim()), static_cast<Eigen::Index>(space->dim()));
  m.setIdentity();
  return BandedOperator(space, space, std::move(m), HalfInt(0));
}

BandedOperator BandedOperator::zero(SpacePtr domain, SpacePtr codomain) {
  SparseMatrix m(static_cast<Eigen::Index>(codomain->dim()), static_cast<Eigen::Index>(domain->dim()));
  return BandedOperator(std::move(domain), std::move(codomain), std::move(m), HalfInt(0));
}

BandedOperator BandedOperator::adjoint() const {
  SparseMatrix t = matrix_.transpose();
  return BandedOperator(codomain_, domain_, std::move(t), margin_);
}

double BandedOperator::entry(const BasisIndex& row, const BasisIndex& col) const {
  auto r = codomain_->find(row);
  auto c = domain_->find(col);
  if (!r || !c) return 0.0;
  return matrix_.coeff(static_cast<Eigen::Index>(*r), static_cast<Eigen::Index>(*c));
}

std::vector<char> interior_mask(const TruncatedSpace& space, HalfInt margin) {
  std::vector<char> mask(space.dim());
  const HalfInt limit = space.lmax() - margin;
  for (std::size_t n = 0; n < space.dim(); ++n) mask[n] = space.at(n).l <= limit;
  return mask;
}

std::vector<char> BandedOperator::interior_columns() const { return interior_mask(*domain_, margin_); }

std::vector<char> BandedOperator::tail_columns(HalfInt l_from) const {
  auto mask = interior_columns();
  for (std::size_t n = 0; n < mask.size(); ++n)
    if (domain_->at(n).l < l_from) mask[n] = 0;
  return mask;
}

std::set<Shift> BandedOperator::shifts(double cutoff) const {
  std::set<Shift> out;
  for (Eigen::Index c = 0; c < matrix_.outerSize(); ++c)
    for (SparseMatrix::InnerIterator it(matrix_, c); it; ++it) {
      if (std::fabs(it.value()) <= cutoff) continue;
      const auto& src = domain_->at(static_cast<std::size_t>(it.col()));
      const auto& dst = codomain_->at(static_cast<std::size_t>(it.row()));
      out.emplace(dst.l - src.l, dst.i - src.i, dst.j - src.j);
    }
  return out;
}

BandedOperator operator*(const BandedOperator& a, const BandedOperator& b) {
  require_same(a.domain_, b.codomain_, "compose");
  SparseMatrix m = (a.matrix_ * b.matrix_).pruned();
  return BandedOperator(b.domain_, a.codomain_, std::move(m), a.margin_ + b.margin_);
}

BandedOperator operator+(const BandedOperator& a, const BandedOperator& b) {
  require_same(a.domain_, b.domain_, "add");
  require_same(a.codomain_, b.codomain_, "add");
  SparseMatrix m = a.matrix_ + b.matrix_;
  return BandedOperator(a.domain_, a.codomain_, std::move(m), std::max(a.margin_, b.margin_));
}

BandedOperator operator-(const BandedOperator& a, const BandedOperator& b) {
  require_same(a.domain_, b.domain_, "subtract");
  require_same(a.codomain_, b.codomain_, "subtract");
  SparseMatrix m = a.matrix_ - b.matrix_;
  return BandedOperator(a.domain_, a.codomain_, std::move(m), std::max(a.margin_, b.margin_));
}

BandedOperator operator*(double s, const BandedOperator& a) {
  SparseMatrix m = s * a.matrix_;
  return BandedOperator(a.domain_, a.codomain_, std::move(m), a.margin_);
}

}  // namespace qkk
