#include "qkk/basis.hpp"

#include <stdexcept>

namespace qkk {

TruncatedSpace::TruncatedSpace(bool full, int k, HalfInt lmax) : full_(full), k_(full ? 0 : k), lmax_(lmax) {
  if (lmax < HalfInt(0)) throw std::invalid_argument("lmax must be >= 0");
  for (int tl = 0; tl <= lmax.twice(); ++tl) {
    const HalfInt l = HalfInt::from_twice(tl);
    if (full_) {
      for (int a = 0; a <= tl; ++a)
        for (int b = 0; b <= tl; ++b)
          basis_.push_back({l, HalfInt::from_twice(-tl + 2 * a), HalfInt::from_twice(-tl + 2 * b)});
    } else {
      const HalfInt j = HalfInt::from_twice(k);
      if (abs(j) > l || !same_parity(l, j)) continue;
      for (int a = 0; a <= tl; ++a) basis_.push_back({l, HalfInt::from_twice(-tl + 2 * a), j});
    }
  }
  position_.reserve(basis_.size());
  for (std::size_t n = 0; n < basis_.size(); ++n) position_.emplace(basis_[n].key(), n);
}

TruncatedSpace TruncatedSpace::bundle(int k, HalfInt lmax) { return TruncatedSpace(false, k, lmax); }
TruncatedSpace TruncatedSpace::full(HalfInt lmax) { return TruncatedSpace(true, 0, lmax); }

std::string TruncatedSpace::describe() const {
  if (full_) return "L2(SU_q(2)) lmax=" + lmax_.str();
  return "L2(E_" + std::to_string(k_) + ") lmax=" + lmax_.str();
}

}  // namespace qkk
