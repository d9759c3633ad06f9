#include "qkk/kring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qkk/anchors.hpp"

namespace qkk {

FusionElement FusionElement::H(int k) {
  if (k < 0) throw std::invalid_argument("irrep labels are nonnegative");
  FusionElement x;
  x.c_[k] = 1;
  return x;
}

Integer FusionElement::operator[](int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? Integer(0) : it->second;
}

bool FusionElement::nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](const auto& kv) { return kv.second > 0; });
}

std::string FusionElement::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, m] : c_) {
    if (!first) os << (m < 0 ? " - " : " + ");
    else if (m < 0) os << "-";
    first = false;
    const Integer a = abs(m);
    if (a != 1) os << a << "*";
    os << "H_" << k;
  }
  return os.str();
}

void FusionElement::add(int k, const Integer& m) {
  if (k < 0 || m == 0) return;
  auto& v = c_[k];
  v += m;
  if (v == 0) c_.erase(k);
}

FusionElement& FusionElement::operator+=(const FusionElement& o) {
  for (const auto& [k, m] : o.c_) add(k, m);
  return *this;
}

FusionElement& FusionElement::operator-=(const FusionElement& o) {
  for (const auto& [k, m] : o.c_) add(k, -m);
  return *this;
}

FusionElement tensor_fundamental(const FusionElement& x) {
  FusionElement y;
  for (const auto& [k, m] : x.terms()) {
    y.add(k + 1, m);
    y.add(k - 1, m);  // dropped at k = 0
  }
  return y;
}

FusionElement fuse(int k, int m) {
  if (k < 0 || m < 0) throw std::invalid_argument("fuse: labels are nonnegative");
  // P_j = H_k ⊗ H_j:  P_{j+1} = P_j ⊗ H_1 − P_{j−1}
  FusionElement prev, cur = FusionElement::H(k);
  for (int j = 0; j < m; ++j) {
    FusionElement next = tensor_fundamental(cur) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

FusionElement fuse(const FusionElement& x, const FusionElement& y) {
  FusionElement out;
  for (const auto& [a, ma] : x.terms())
    for (const auto& [b, mb] : y.terms()) {
      const auto ab = fuse(a, b);
      for (const auto& [c, mc] : ab.terms()) out.add(c, ma * mb * mc);
    }
  return out;
}

Integer dim_classical(int n, int k) {
  if (n < 2) throw std::invalid_argument("dim_classical: n must be >= 2");
  if (k < 0) throw std::invalid_argument("dim_classical: label must be >= 0");
  Integer prev = 1, cur = n;
  if (k == 0) return prev;
  for (int j = 1; j < k; ++j) {
    Integer next = Integer(n) * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Integer dim_classical(int n, const FusionElement& x) {
  Integer d = 0;
  for (const auto& [k, m] : x.terms()) d += m * dim_classical(n, k);
  return d;
}

double dim_quantum(const QParam& q, int k) {
  if (k < 0) throw std::invalid_argument("dim_quantum: label must be >= 0");
  return qnumber<double>(q, k + 1);
}

double dim_quantum(const QParam& q, const FusionElement& x) {
  double d = 0.0;
  for (const auto& [k, m] : x.terms()) d += static_cast<double>(m) * dim_quantum(q, k);
  return d;
}

ZtPoly::ZtPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

void ZtPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer ZtPoly::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

ZtPoly operator*(const ZtPoly& a, const ZtPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return ZtPoly(std::move(c));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    for (long v : r) a_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix product: shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix must be square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<Integer> SmithForm::invariants() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) d.push_back(D(i, i));
  return d;
}

namespace {

struct Elimination {
  IntMatrix& D;
  IntMatrix& U;
  IntMatrix& V;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < D.cols(); ++c) std::swap(D(a, c), D(b, c));
    for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U(a, c), U(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < D.rows(); ++r) std::swap(D(r, a), D(r, b));
    for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, a), V(r, b));
  }
  // row a += f · row b
  void add_row(std::size_t a, std::size_t b, const Integer& f) {
    for (std::size_t c = 0; c < D.cols(); ++c) D(a, c) += f * D(b, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(a, c) += f * U(b, c);
  }
  void add_col(std::size_t a, std::size_t b, const Integer& f) {
    for (std::size_t r = 0; r < D.rows(); ++r) D(r, a) += f * D(r, b);
    for (std::size_t r = 0; r < V.rows(); ++r) V(r, a) += f * V(r, b);
  }
  void negate_row(std::size_t a) {
    for (std::size_t c = 0; c < D.cols(); ++c) D(a, c) = -D(a, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(a, c) = -U(a, c);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm s{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
  Elimination e{s.D, s.U, s.V};
  const std::size_t m = a.rows(), n = a.cols();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      std::size_t pr = m, pc = n;
      Integer best;
      for (std::size_t r = t; r < m; ++r)
        for (std::size_t c = t; c < n; ++c) {
          if (s.D(r, c) == 0) continue;
          const Integer v = abs(s.D(r, c));
          if (pr == m || v < best) {
            best = v;
            pr = r;
            pc = c;
          }
        }
      if (pr == m) return s;  // trailing block is zero
      e.swap_rows(t, pr);
      e.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < m; ++r)
        if (s.D(r, t) != 0) {
          e.add_row(r, t, -(s.D(r, t) / s.D(t, t)));
          clean = clean && s.D(r, t) == 0;
        }
      for (std::size_t c = t + 1; c < n; ++c)
        if (s.D(t, c) != 0) {
          e.add_col(c, t, -(s.D(t, c) / s.D(t, t)));
          clean = clean && s.D(t, c) == 0;
        }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t r = t + 1; r < m && divides; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (s.D(r, c) % s.D(t, t) != 0) {
            e.add_row(t, r, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (s.D(t, t) < 0) e.negate_row(t);
  }
  return s;
}

IntMatrix multiplication_matrix(const ZtPoly& p, int D) {
  if (D < 1) throw std::invalid_argument("multiplication_matrix: D must be >= 1");
  const int deg = std::max(p.degree(), 0);
  IntMatrix M(static_cast<std::size_t>(D + deg), static_cast<std::size_t>(D));
  for (int c = 0; c < D; ++c)
    for (int k = 0; k <= p.degree(); ++k)
      M(static_cast<std::size_t>(c + k), static_cast<std::size_t>(c)) = p.coeffs()[static_cast<std::size_t>(k)];
  return M;
}

namespace {

double as_double(const Integer& x) { return static_cast<double>(x); }

}  // namespace

VerificationReport koszul_verify(int n, int D) {
  if (n < 2) throw std::invalid_argument("koszul_verify: n must be >= 2");
  if (D < 1) throw std::invalid_argument("koszul_verify: D must be >= 1");
  VerificationReport rep("koszul");
  const std::string anchor = anchors::koszul;

  const ZtPoly n_minus_t({Integer(n), Integer(-1)});
  const IntMatrix M = multiplication_matrix(n_minus_t, D);
  const SmithForm snf = smith_normal_form(M);
  const auto inv = snf.invariants();
  const std::size_t rank = inv.size();
  const long kernel = static_cast<long>(M.cols()) - static_cast<long>(rank);
  const long free_coker = static_cast<long>(M.rows()) - static_cast<long>(rank);
  std::vector<Integer> torsion;
  for (const auto& d : inv)
    if (d != 1) torsion.push_back(d);

  rep.holds("SNF certificate: U*M*V = D, |det U| = |det V| = 1, D diagonal", anchors::snf,
            snf.U * M * snf.V == snf.D && abs(determinant(snf.U)) == 1 && abs(determinant(snf.V)) == 1 &&
                snf.D.is_diagonal());
  rep.equal("kernel rank of n - t", anchor, static_cast<double>(kernel), 0.0);
  rep.equal("cokernel free rank", anchor, static_cast<double>(free_coker), 1.0);
  rep.equal("cokernel torsion factors", anchor, static_cast<double>(torsion.size()), 0.0);

  // ε on ℤ[t]_{≤D}: t^k ↦ n^k
  std::vector<Integer> eps(M.rows());
  eps[0] = 1;
  for (std::size_t k = 1; k < eps.size(); ++k) eps[k] = eps[k - 1] * n;
  Integer worst = 0;
  for (std::size_t c = 0; c < M.cols(); ++c) {
    Integer v = 0;
    for (std::size_t r = 0; r < M.rows(); ++r) v += eps[r] * M(r, c);
    worst = std::max(worst, Integer(abs(v)));
  }
  rep.equal("eps o (n - t) = 0 on the truncation (max |entry|)", anchor, as_double(worst), 0.0);
  Integer g = 0;
  for (const auto& x : eps) g = gcd(g, x);
  rep.equal("eps surjective (gcd of eps(t^k))", anchor, as_double(g), 1.0);
  // image has rank D and torsion-free cokernel, so it is saturated in ker ε (also rank D)
  rep.holds("image(n - t) = ker(eps) on the truncation", anchor,
            kernel == 0 && torsion.empty() && static_cast<long>(rank) == static_cast<long>(M.rows()) - 1);
  rep.equal("evaluation eps(n - t)", anchor, as_double(n_minus_t.evaluate(n)), 0.0);

  std::vector<std::string> inv_str;
  for (const auto& d : inv) inv_str.push_back(d.str());
  rep.results()["matrix_shape"] = {M.rows(), M.cols()};
  rep.results()["invariant_factors"] = inv_str;
  rep.results()["kernel_rank"] = kernel;
  rep.results()["cokernel"] = free_coker == 1 && torsion.empty() ? "Z" : "other";
  rep.parameters()["n"] = n;
  rep.parameters()["D"] = D;
  return rep;
}

std::string AbelianGroup::str() const {
  std::ostringstream os;
  bool any = false;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    any = true;
  }
  for (const auto& t : torsion) {
    os << (any ? " + " : "") << "Z/" << t;
    any = true;
  }
  return any ? os.str() : "0";
}

KGroups ktheory_fo(int n, int D) {
  if (n < 2) throw std::invalid_argument("ktheory_fo: n must be >= 2");
  KGroups k;
  k.certificate = koszul_verify(n, D);
  k.induced_endomorphism = ZtPoly({Integer(n), Integer(-1)}).evaluate(n);

  IntMatrix E(1, 1);
  E(0, 0) = k.induced_endomorphism;
  const auto snf = smith_normal_form(E);
  const auto inv = snf.invariants();
  k.k0.free_rank = static_cast<int>(1 - inv.size());
  k.k1.free_rank = static_cast<int>(1 - inv.size());
  for (const auto& d : inv)
    if (d != 1) k.k0.torsion.push_back(d);
  k.k0.generator = "[1]";
  k.k1.generator = "[u]";

  auto& rep = k.certificate;
  const std::string anchor = anchors::kgroups;
  rep.equal("induced endomorphism eps(n - t) on Z", anchor, as_double(k.induced_endomorphism), 0.0);
  rep.holds("K_0 = Z generated by [1]", anchor, k.k0.str() == "Z");
  rep.holds("K_1 = Z generated by [u]", anchor, k.k1.str() == "Z");
  rep.assume("the six-term sequence reduces to ker/coker of the induced map on K_0 (trusted, not computed)");
  rep.assume("K-amenability: maximal and reduced C*-algebras have the same K-theory (trusted)");
  rep.results()["K0"] = {{"group", k.k0.str()}, {"generator", k.k0.generator}};
  rep.results()["K1"] = {{"group", k.k1.str()}, {"generator", k.k1.generator}};
  return k;
}

}  // namespace qkk
