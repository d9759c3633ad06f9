#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qkk/qparam.hpp"
#include "qkk/report.hpp"

namespace qkk {

using Integer = boost::multiprecision::cpp_int;

/// Formal ℤ-combination of irreducible labels H_k, k ≥ 0.
class FusionElement {
public:
  FusionElement() = default;
  static FusionElement H(int k);

  Integer operator[](int k) const;
  const std::map<int, Integer>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool nonnegative() const;
  int max_label() const { return c_.empty() ? -1 : c_.rbegin()->first; }
  std::string str() const;

  void add(int k, const Integer& m);
  FusionElement& operator+=(const FusionElement& o);
  FusionElement& operator-=(const FusionElement& o);
  friend FusionElement operator+(FusionElement a, const FusionElement& b) { return a += b; }
  friend FusionElement operator-(FusionElement a, const FusionElement& b) { return a -= b; }
  friend bool operator==(const FusionElement&, const FusionElement&) = default;

private:
  std::map<int, Integer> c_;  // no zero entries
};

/// x ⊗ H_1, termwise H_j ↦ H_{j+1} + H_{j−1} (H_{−1} = 0).
FusionElement tensor_fundamental(const FusionElement& x);
/// H_k ⊗ H_m by iterating the rank-1 rule.
FusionElement fuse(int k, int m);
/// Bilinear extension.
FusionElement fuse(const FusionElement& x, const FusionElement& y);

/// d_0 = 1, d_1 = n, d_{k+1} = n d_k − d_{k−1}.
Integer dim_classical(int n, int k);
Integer dim_classical(int n, const FusionElement& x);
/// [k+1]_q.
double dim_quantum(const QParam& q, int k);
double dim_quantum(const QParam& q, const FusionElement& x);

/// Polynomial in t with exact integer coefficients.
class ZtPoly {
public:
  ZtPoly() = default;
  explicit ZtPoly(std::vector<Integer> coeffs);
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // −1 for zero
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer evaluate(const Integer& t) const;
  friend ZtPoly operator*(const ZtPoly& a, const ZtPoly& b);
  friend bool operator==(const ZtPoly&, const ZtPoly&) = default;

private:
  void trim();
  std::vector<Integer> c_;
};

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  bool is_diagonal() const;
  std::string str() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

/// Exact determinant (fraction-free elimination).
Integer determinant(const IntMatrix& a);

struct SmithForm {
  IntMatrix U, D, V;  // U·A·V = D
  std::vector<Integer> invariants() const;  // nonzero diagonal entries
  std::size_t rank() const { return invariants().size(); }
};

/// Pivot: smallest nonzero |entry| in the trailing block, ties broken row-major.
SmithForm smith_normal_form(const IntMatrix& a);

/// Matrix of multiplication by p: ℤ[t]_{≤D−1} → ℤ[t]_{≤D−1+deg p}, monomial bases.
IntMatrix multiplication_matrix(const ZtPoly& p, int D);

/// 0 → ℤ[t]_{≤D−1} →(n−t) ℤ[t]_{≤D} →ε ℤ → 0, with ε(t) = n.
VerificationReport koszul_verify(int n, int D);

struct AbelianGroup {
  int free_rank = 0;
  std::vector<Integer> torsion;
  std::string generator;
  std::string str() const;  // "Z", "Z^2 + Z/3", "0"
};

struct KGroups {
  AbelianGroup k0, k1;
  Integer induced_endomorphism;
  VerificationReport certificate{"koszul"};
};

/// K_0 = coker, K_1 = ker of the induced map ε(n − t) on ℤ.
KGroups ktheory_fo(int n, int D = 10);

}  // namespace qkk
