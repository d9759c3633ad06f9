#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "qkk/halfint.hpp"

namespace qkk {

/// Label (l, i, j) of the orthonormal vector e^(l)_{i,j}.
struct BasisIndex {
  HalfInt l, i, j;

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;

  /// Parity only: l − i, l − j ∈ ℤ.
  bool parity_ok() const { return same_parity(l, i) && same_parity(l, j); }
  /// Labels an actual basis vector.
  bool admissible() const { return l >= HalfInt(0) && abs(i) <= l && abs(j) <= l && parity_ok(); }

  std::int64_t key() const {
    return (static_cast<std::int64_t>(l.twice()) << 40) ^
           (static_cast<std::int64_t>(i.twice() + (1 << 19)) << 20) ^
           static_cast<std::int64_t>(j.twice() + (1 << 19));
  }

  std::string str() const { return "e(" + l.str() + ";" + i.str() + "," + j.str() + ")"; }
};

inline std::ostream& operator<<(std::ostream& os, const BasisIndex& b) { return os << b.str(); }

/// Truncation of L²(SU_q(2)) (full mode) or of a line-bundle subspace L²(E_k).
class TruncatedSpace {
public:
  /// L²(E_k): column weight j = k/2, spins |k|/2 ≤ l ≤ lmax.
  static TruncatedSpace bundle(int k, HalfInt lmax);
  /// All of L²(SU_q(2)) up to spin lmax.
  static TruncatedSpace full(HalfInt lmax);

  bool is_full() const { return full_; }
  int k() const { return k_; }
  HalfInt lmax() const { return lmax_; }
  std::size_t dim() const { return basis_.size(); }

  const std::vector<BasisIndex>& basis() const { return basis_; }
  const BasisIndex& at(std::size_t n) const { return basis_[n]; }

  /// Position of b, or nullopt when b is not admissible in this truncation.
  std::optional<std::size_t> find(const BasisIndex& b) const {
    auto it = position_.find(b.key());
    if (it == position_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const BasisIndex& b) const { return position_.contains(b.key()); }

  /// Same kind of space with winding k (bundle) or unchanged (full).
  TruncatedSpace shifted(int dk) const { return full_ ? *this : bundle(k_ + dk, lmax_); }

  std::string describe() const;

  friend bool operator==(const TruncatedSpace& a, const TruncatedSpace& b) {
    return a.full_ == b.full_ && a.k_ == b.k_ && a.lmax_ == b.lmax_;
  }

private:
  TruncatedSpace(bool full, int k, HalfInt lmax);

  bool full_ = false;
  int k_ = 0;
  HalfInt lmax_;
  std::vector<BasisIndex> basis_;
  std::unordered_map<std::int64_t, std::size_t> position_;
};

}  // namespace qkk
