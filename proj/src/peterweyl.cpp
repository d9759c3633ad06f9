#include "qkk/peterweyl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qkk/spectral.hpp"

namespace qkk {

double coeff_reg(RegSymbol sym, const QParam& q, HalfInt l, HalfInt i, HalfInt j) {
  return coeff_reg<double>(sym, Deformation<double>(q), l, i, j);
}

std::string to_string(Generator g) {
  switch (g) {
    case Generator::alpha: return "alpha";
    case Generator::gamma: return "gamma";
    case Generator::alpha_star: return "alpha*";
    case Generator::gamma_star: return "gamma*";
  }
  return "?";
}

Generator star(Generator g) {
  switch (g) {
    case Generator::alpha: return Generator::alpha_star;
    case Generator::gamma: return Generator::gamma_star;
    case Generator::alpha_star: return Generator::alpha;
    case Generator::gamma_star: return Generator::gamma;
  }
  return g;
}

int winding_shift(Generator g) { return (g == Generator::alpha || g == Generator::gamma) ? -1 : 1; }

BandedOperator generator_op(Generator g, const QParam& q, SpacePtr domain) {
  const Deformation<double> d(q);
  auto codomain = domain->is_full() ? domain : std::make_shared<const TruncatedSpace>(domain->shifted(winding_shift(g)));
  return BandedOperator::build(domain, codomain, half, [&](const BasisIndex& b, auto&& emit) {
    generator_images(g, d, b, emit);
  });
}

GeneratorImages regular_images(const QParam& q, HalfInt lmax) {
  auto space = full_space(lmax);
  return {generator_op(Generator::alpha, q, space), generator_op(Generator::gamma, q, space),
          generator_op(Generator::alpha_star, q, space), generator_op(Generator::gamma_star, q, space)};
}

std::vector<RelationResidual> defining_relation_residuals(const GeneratorImages& g, double q) {
  const auto one = BandedOperator::identity(g.alpha.domain());
  const auto& a = g.alpha;
  const auto& c = g.gamma;
  const auto& as = g.alpha_star;
  const auto& cs = g.gamma_star;
  std::vector<RelationResidual> out;
  out.push_back({"alpha gamma = q gamma alpha", interior_norm(a * c - q * (c * a))});
  out.push_back({"alpha gamma* = q gamma* alpha", interior_norm(a * cs - q * (cs * a))});
  out.push_back({"gamma gamma* = gamma* gamma", interior_norm(c * cs - cs * c)});
  out.push_back({"alpha* alpha + gamma* gamma = 1", interior_norm(as * a + cs * c - one)});
  out.push_back({"alpha alpha* + q^2 gamma gamma* = 1", interior_norm(a * as + (q * q) * (c * cs) - one)});
  out.push_back({"alpha* = adjoint(alpha)", interior_norm(as - a.adjoint())});
  out.push_back({"gamma* = adjoint(gamma)", interior_norm(cs - c.adjoint())});
  return out;
}

double adjoint_consistency(const QParam& q, HalfInt lmax) {
  auto g = regular_images(q, lmax);
  double worst = 0.0;
  for (auto [x, xs] : {std::pair{&g.alpha, &g.alpha_star}, std::pair{&g.gamma, &g.gamma_star}}) {
    const auto diff = *xs - x->adjoint();
    const auto mask = interior_mask(*diff.domain(), half);
    worst = std::max(worst, max_abs_entry(diff.matrix(), mask, mask));
  }
  return worst;
}

StateVector StateVector::basis_vector(const BasisIndex& b) {
  if (!b.admissible()) throw std::invalid_argument("not a basis vector: " + b.str());
  StateVector v;
  v.amplitudes.emplace(b, 1.0);
  return v;
}

std::complex<double> StateVector::operator[](const BasisIndex& b) const {
  auto it = amplitudes.find(b);
  return it == amplitudes.end() ? std::complex<double>{} : it->second;
}

void StateVector::add(const BasisIndex& b, std::complex<double> value) {
  if (value == std::complex<double>{}) return;
  auto [it, inserted] = amplitudes.try_emplace(b, value);
  if (!inserted) it->second += value;
}

double StateVector::max_abs() const {
  double m = 0.0;
  for (const auto& [b, x] : amplitudes) m = std::max(m, std::abs(x));
  return m;
}

StateVector operator-(const StateVector& a, const StateVector& b) {
  StateVector out = a;
  for (const auto& [k, x] : b.amplitudes) out.add(k, -x);
  return out;
}

StateVector involution(const StateVector& v, const QParam& q) {
  StateVector out;
  for (const auto& [b, x] : v.amplitudes) {
    const int sign = ((2 * b.l + b.i + b.j).to_int() % 2 == 0) ? 1 : -1;
    const double factor = sign * std::pow(q.value(), (b.i + b.j).to_int());
    out.add({b.l, -b.i, -b.j}, factor * std::conj(x));
  }
  return out;
}

StateVector apply(Generator g, const QParam& q, const StateVector& v) {
  const Deformation<double> d(q);
  StateVector out;
  for (const auto& [b, x] : v.amplitudes)
    generator_images(g, d, b, [&](const BasisIndex& target, double c) {
      if (c != 0.0) out.add(target, c * x);
    });
  return out;
}

std::complex<double> haar_state(const std::vector<Generator>& word, const QParam& q, HalfInt lmax) {
  if (static_cast<int>(word.size()) > lmax.twice())
    throw std::invalid_argument("haar_state: word of length " + std::to_string(word.size()) +
                                " needs lmax >= " + HalfInt::from_twice(static_cast<int>(word.size())).str());
  const BasisIndex unit{0, 0, 0};
  auto v = StateVector::basis_vector(unit);
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply(*it, q, v);
  return v[unit];
}

StateVector spectral_project(const StateVector& v, HalfInt l) {
  StateVector out;
  for (const auto& [b, x] : v.amplitudes)
    if (b.l == l) out.amplitudes.emplace(b, x);
  return out;
}

double quantum_dimension(const QParam& q, HalfInt l) {
  if (l < HalfInt(0)) throw std::invalid_argument("quantum_dimension: negative spin");
  const int n = l.twice() + 1;
  if (!q.is_strict()) return (q.sign() < 0 && n % 2 == 0) ? -n : n;
  return qnumber(q, n);
}

}  // namespace qkk
