#include "qkk/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace qkk {

namespace {

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<double> singular_values(const SparseMatrix& m, const std::vector<char>* column_mask) {
  const auto cols = static_cast<std::size_t>(m.cols());
  if (column_mask && column_mask->size() != cols) throw std::invalid_argument("singular_values: mask size");
  auto selected = [&](std::size_t c) { return !column_mask || (*column_mask)[c]; };

  DisjointSets sets(cols);
  std::vector<long> row_owner(static_cast<std::size_t>(m.rows()), -1);
  for (std::size_t c = 0; c < cols; ++c) {
    if (!selected(c)) continue;
    for (SparseMatrix::InnerIterator it(m, static_cast<Eigen::Index>(c)); it; ++it) {
      if (it.value() == 0.0) continue;
      auto& owner = row_owner[static_cast<std::size_t>(it.row())];
      if (owner < 0)
        owner = static_cast<long>(c);
      else
        sets.unite(static_cast<std::size_t>(owner), c);
    }
  }

  std::unordered_map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t c = 0; c < cols; ++c)
    if (selected(c)) blocks[sets.find(c)].push_back(c);

  std::vector<double> out;
  std::unordered_map<Eigen::Index, Eigen::Index> local_row;
  for (const auto& [root, members] : blocks) {
    local_row.clear();
    for (std::size_t c : members)
      for (SparseMatrix::InnerIterator it(m, static_cast<Eigen::Index>(c)); it; ++it)
        if (it.value() != 0.0) local_row.try_emplace(it.row(), static_cast<Eigen::Index>(local_row.size()));
    if (local_row.empty()) continue;
    Eigen::MatrixXd block = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(local_row.size()),
                                                  static_cast<Eigen::Index>(members.size()));
    for (std::size_t k = 0; k < members.size(); ++k)
      for (SparseMatrix::InnerIterator it(m, static_cast<Eigen::Index>(members[k])); it; ++it)
        if (it.value() != 0.0) block(local_row.at(it.row()), static_cast<Eigen::Index>(k)) = it.value();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(block);
    const auto& sv = svd.singularValues();
    out.insert(out.end(), sv.data(), sv.data() + sv.size());
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double operator_norm(const SparseMatrix& m, const std::vector<char>* column_mask) {
  auto sv = singular_values(m, column_mask);
  return sv.empty() ? 0.0 : sv.front();
}

double interior_norm(const BandedOperator& op) {
  auto mask = op.interior_columns();
  return operator_norm(op.matrix(), &mask);
}

double tail_norm(const BandedOperator& op, HalfInt l_from) {
  auto mask = op.tail_columns(l_from);
  return operator_norm(op.matrix(), &mask);
}

double max_abs_entry(const SparseMatrix& m, const std::vector<char>& row_mask, const std::vector<char>& column_mask) {
  double worst = 0.0;
  for (Eigen::Index c = 0; c < m.outerSize(); ++c) {
    if (!column_mask[static_cast<std::size_t>(c)]) continue;
    for (SparseMatrix::InnerIterator it(m, c); it; ++it)
      if (row_mask[static_cast<std::size_t>(it.row())]) worst = std::max(worst, std::fabs(it.value()));
  }
  return worst;
}

RankDecision numerical_rank(const SparseMatrix& m, double threshold, double guard) {
  RankDecision d;
  for (double s : singular_values(m)) {
    if (s > threshold) {
      ++d.rank;
      d.smallest_kept = d.rank == 1 ? s : std::min(d.smallest_kept, s);
    } else {
      d.largest_dropped = std::max(d.largest_dropped, s);
    }
  }
  if (d.rank > 0 && d.smallest_kept < guard * threshold)
    throw std::runtime_error("ill-conditioned rank decision: smallest kept singular value " +
                             std::to_string(d.smallest_kept) + " within " + std::to_string(guard) +
                             "x of threshold " + std::to_string(threshold));
  return d;
}

}  // namespace qkk
