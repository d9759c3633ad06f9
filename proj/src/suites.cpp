#include "qkk/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "qkk/anchors.hpp"
#include "qkk/foq.hpp"
#include "qkk/homotopy.hpp"
#include "qkk/kring.hpp"
#include "qkk/podles.hpp"

namespace qkk {

Json SuiteConfig::to_json() const {
  Json j;
  j["suite"] = suite;
  j["q"] = q;
  j["lmax"] = lmax.str();
  j["tol_identity"] = tol_identity;
  j["tol_decay"] = tol_decay;
  j["t_grid"] = t_grid;
  j["n"] = n;
  j["D"] = D;
  j["L0"] = L0 ? Json(*L0) : Json(nullptr);
  j["precision"] = precision ? Json(*precision) : Json(nullptr);
  j["seed"] = seed;
  return j;
}

const std::vector<SuiteInfo>& suite_catalog() {
  using namespace anchors;
  static const std::vector<SuiteInfo> catalog = {
      {"relations", {"q", "lmax"}, {defining_relations, adjoint_tables},
       "five defining relations and adjoint pairs of the regular representation on interior vectors"},
      {"podles", {"q", "lmax"}, {podles_relations, podles_composites, haar},
       "A/B tables: Podles relations, generator composites, Haar state of gamma* gamma"},
      {"lemma1", {"q", "lmax", "t_grid"}, {star_compat, t1_collapse, omega_hom, omega_counit, continuity},
       "rescaled tables: pairing identities, omega_t relations, t = 1 slice, continuity at l = 0"},
      {"lemma2", {"q", "lmax", "t_grid", "tol_decay"}, {decay},
       "sup over t and i of the endpoint differences on l = 10, 20, ...: monotone decay and log-linear fit"},
      {"lemma3", {"q", "lmax"}, {endpoint}, "t = 0 identities with sgn(q); unsigned negative control for q < 0"},
      {"fredholm", {"q", "lmax"}, {index, compact_commutators},
       "index of F on (H_1, H_-1) and (H_0, H_-2) for every truncation; commutator tails"},
      {"rotation", {"q < 0", "lmax", "t_grid"}, {rotation}, "rotation homotopy endpoints and uniform tail bound"},
      {"degenerate", {"q", "lmax"}, {j_symmetry, degenerate_h0}, "degeneracy of the t = 1 and t = 0 modules"},
      {"koszul", {"n", "D"}, {snf, koszul, kgroups}, "Koszul complex in exact integers and the K-groups"},
      {"fusion", {"n", "q"}, {fusion, dimensions},
       "associativity of the fusion ring and multiplicativity of classical and quantum dimensions"},
      {"foq", {"seed"}, {foq_invariant, foq_su2},
       "Q-matrix invariants, equivalence predicate on random matrices, SU_q(2) parameter solver"},
      {"all", {"q", "lmax"}, {}, "every suite above (rotation only for q < 0)"},
  };
  return catalog;
}

Json catalog_json() {
  Json out = Json::array();
  for (const auto& s : suite_catalog()) {
    Json e;
    e["name"] = s.name;
    e["required"] = s.required;
    e["anchors"] = s.anchors;
    e["summary"] = s.summary;
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

int integer_lmax(const SuiteConfig& c) {
  if (!c.lmax.is_integer()) throw UsageError("suite " + c.suite + " needs an integer lmax, got " + c.lmax.str());
  return c.lmax.to_int();
}

QParam strict_q(const SuiteConfig& c) {
  QParam q(c.q);
  if (!q.is_strict()) throw UsageError("suite " + c.suite + " requires |q| < 1");
  return q;
}

int default_L0(const SuiteConfig& c, int lmax) {
  const int L0 = c.L0 ? *c.L0 : std::min(15, lmax - 2);
  if (L0 < 1 || L0 >= lmax - 1) throw UsageError("L0 must satisfy 1 <= L0 < lmax - 1");
  return L0;
}

VerificationReport relations_suite(const SuiteConfig& c) {
  const QParam q = strict_q(c);
  if (c.lmax < HalfInt(2)) throw UsageError("relations: lmax must be >= 2");
  VerificationReport rep("relations");
  const auto g = regular_images(q, c.lmax);
  Json res = Json::object();
  for (const auto& r : defining_relation_residuals(g, q.value())) {
    const bool adj = r.name.find("adjoint") != std::string::npos;
    rep.below(r.name, adj ? anchors::adjoint_tables : anchors::defining_relations, r.residual, c.tol_identity);
    res[r.name] = r.residual;
  }
  rep.results()["residuals"] = res;
  rep.results()["dimension"] = g.alpha.domain()->dim();
  return rep;
}

VerificationReport podles_suite(const SuiteConfig& c) {
  const QParam q = strict_q(c);
  if (c.lmax < HalfInt(3)) throw UsageError("podles: lmax must be >= 3");
  return check_podles_relations(q, c.lmax, c.tol_identity);
}

std::vector<int> decay_l_list(int lmax) {
  std::vector<int> ls;
  const int top = std::max(40, lmax / 10 * 10);
  for (int l = 10; l <= top; l += 10) ls.push_back(l);
  return ls;
}

VerificationReport lemma2_suite(const SuiteConfig& c) {
  const QParam q = strict_q(c);
  Precision p;
  p.tol_identity = c.tol_identity;
  p.tol_decay = c.tol_decay;
  if (c.precision) {
    if (*c.precision == "extended") p.mode = Precision::Mode::extended;
    else if (*c.precision == "standard") p.mode = Precision::Mode::standard;
    else throw UsageError("precision must be 'standard' or 'extended'");
  } else {
    p.mode = q.abs() <= 0.7 ? Precision::Mode::extended : Precision::Mode::standard;
  }
  auto rep = verify_lemma2(q, decay_l_list(integer_lmax(c)), c.t_grid, p);
  return rep;
}

VerificationReport fredholm_suite(const SuiteConfig& c) {
  const QParam q = strict_q(c);
  const int lmax = integer_lmax(c);
  if (lmax < 4) throw UsageError("fredholm: lmax must be >= 4");
  const int L0 = default_L0(c, lmax);
  VerificationReport rep("fredholm");

  std::vector<long> idx_dirac, idx_shift;
  double unitarity = 0.0;
  for (int L = 1; L <= lmax; ++L) {
    auto Dm = dirac_module(L);
    unitarity = std::max(unitarity, Dm.unitarity_residual());
    idx_dirac.push_back(fredholm_index(Dm.F_plus).index);
    idx_shift.push_back(fredholm_index(make_fredholm_module(0, -2, L).F_plus).index);
  }
  const bool all0 = std::all_of(idx_dirac.begin(), idx_dirac.end(), [](long v) { return v == 0; });
  const bool all1 = std::all_of(idx_shift.begin(), idx_shift.end(), [](long v) { return v == 1; });
  rep.holds("index(F) = 0 on (H_1, H_-1) for lmax = 1.." + std::to_string(lmax), anchors::index, all0);
  rep.holds("index(F+) = 1 on (H_0, H_-2) for lmax = 1.." + std::to_string(lmax), anchors::index, all1);
  rep.below("F unitary on (H_1, H_-1)", anchors::index, unitarity, c.tol_identity);

  // tails of [F, x] on the Dirac module for x in A, B, B*
  auto D = dirac_module(lmax);
  Json tails = Json::object();
  const double rate = q.abs();
  for (PodlesKind x : {PodlesKind::A, PodlesKind::B, PodlesKind::B_star}) {
    const auto xp = podles_op(x, q, D.plus_space), xm = podles_op(x, q, D.minus_space);
    std::vector<double> ls, ts;
    for (int l0 = 1; l0 < lmax - 1; ++l0) {
      ls.push_back(l0);
      ts.push_back(commutator_tail(D, xp, xm, l0));
      rep.add_row(l0, "tail [F, " + to_string(x) + "]", ts.back());
    }
    bool decreasing = true;
    for (std::size_t k = 1; k < ts.size(); ++k) decreasing = decreasing && ts[k] < ts[k - 1];
    std::vector<double> fl, ft;
    for (std::size_t k = 0; k < ls.size(); ++k)
      if (ls[k] >= 5) {
        fl.push_back(ls[k]);
        ft.push_back(ts[k]);
      }
    const auto fit = log_linear_fit(fl, ft);
    const double at_L0 = ts[static_cast<std::size_t>(L0 - 1)];
    const std::string xs = to_string(x);
    rep.holds("tail of [F, " + xs + "] strictly decreasing in L0", anchors::compact_commutators, decreasing);
    if (fit.points >= 3) {
      rep.above("tail of [F, " + xs + "] log-linear fit R^2", anchors::compact_commutators, fit.r_squared, 0.99);
      rep.below("tail of [F, " + xs + "] geometric: decay rate per spin < (1 + |q|)/2", anchors::compact_commutators,
                std::exp(fit.slope), (1.0 + rate) / 2);
    }
    tails[xs] = {{"at_L0", at_L0}, {"rate_per_spin", std::exp(fit.slope)}, {"r_squared", fit.r_squared},
                 {"below_1e-6_at_L0", at_L0 < 1e-6}};
  }
  rep.results()["index_dirac"] = idx_dirac;
  rep.results()["index_shift"] = idx_shift;
  rep.results()["tails"] = tails;
  rep.parameters()["L0"] = L0;
  rep.assume("the truncated index is the index of the untruncated F (F maps spin blocks to spin blocks)");
  return rep;
}

VerificationReport rotation_suite(const SuiteConfig& c) {
  const QParam q = strict_q(c);
  if (q.sign() > 0) throw UsageError("rotation requires q < 0");
  const int lmax = integer_lmax(c);
  if (lmax < 4) throw UsageError("rotation: lmax must be >= 4");
  return rotation_homotopy_check(q, c.t_grid, lmax, default_L0(c, lmax), c.tol_identity);
}

VerificationReport fusion_suite(const SuiteConfig& c) {
  const QParam q = strict_q(c);
  if (c.n < 2) throw UsageError("fusion: n must be >= 2");
  VerificationReport rep("fusion");
  const int top = 10;
  bool assoc = true, positive = true, classical = true;
  for (int a = 0; a <= top; ++a)
    for (int b = 0; b <= top; ++b) {
      const auto ab = fuse(a, b);
      positive = positive && ab.nonnegative();
      classical = classical && dim_classical(c.n, a) * dim_classical(c.n, b) == dim_classical(c.n, ab);
      for (int d = 0; d <= top && assoc; ++d)
        assoc = fuse(ab, FusionElement::H(d)) == fuse(FusionElement::H(a), fuse(b, d));
    }
  double quantum = 0.0;
  for (int a = 0; a <= top; ++a)
    for (int b = 0; b <= top; ++b) {
      const double lhs = dim_quantum(q, a) * dim_quantum(q, b);
      quantum = std::max(quantum, std::fabs(lhs - dim_quantum(q, fuse(a, b))) / std::max(1.0, std::fabs(lhs)));
    }
  rep.holds("fuse(k,1) = H_(k-1) + H_(k+1)", anchors::fusion,
            fuse(3, 1) == FusionElement::H(2) + FusionElement::H(4) && fuse(0, 1) == FusionElement::H(1));
  rep.holds("associativity for labels <= 10", anchors::fusion, assoc);
  rep.holds("multiplicities nonnegative", anchors::fusion, positive);
  rep.holds("classical dimension multiplicative (exact)", anchors::dimensions, classical);
  rep.below("quantum dimension multiplicative (relative residual)", anchors::dimensions, quantum, c.tol_identity);
  Json dims = Json::array();
  for (int k = 0; k <= 5; ++k) dims.push_back(dim_classical(c.n, k).str());
  rep.results()["dim_classical"] = dims;
  rep.results()["fuse(2,2)"] = fuse(2, 2).str();
  return rep;
}

VerificationReport koszul_suite(const SuiteConfig& c) {
  if (c.n < 2) throw UsageError("koszul: n must be >= 2");
  if (c.D < 1) throw UsageError("koszul: D must be >= 1");
  return ktheory_fo(c.n, c.D).certificate;
}

VerificationReport foq_suite(const SuiteConfig& c) {
  VerificationReport rep("foq");
  rep.set_seed(c.seed);
  double roundtrip = 0.0;
  for (double q : {0.1, -0.1, 0.5, -0.5, 0.9, -0.9, 1.0, -1.0})
    roundtrip = std::max(roundtrip, std::fabs(solve_su2_parameter(canonical_su2_qmatrix(q)) - q));
  rep.below("solve(canonical(q)) = q on q in {+-0.1, +-0.5, +-0.9, +-1}", anchors::foq_su2, roundtrip, 1e-12);
  const double q3 = solve_su2_parameter(validate_q(ComplexMatrix::Identity(3, 3)));
  rep.below("Q = 1_3 gives q = -(3 - sqrt 5)/2", anchors::foq_su2, std::fabs(q3 + (3 - std::sqrt(5.0)) / 2), 1e-12);
  rep.equal("Q = 1_2 gives q = -1", anchors::foq_su2, solve_su2_parameter(validate_q(ComplexMatrix::Identity(2, 2))),
            -1.0);
  const auto inv = invariant_pair(canonical_su2_qmatrix(0.5));
  rep.below("canonical Q at q = 0.5 has invariant (-1, 2.5)", anchors::foq_invariant,
            std::fabs(inv.trace - 2.5) + std::abs(inv.sign + 1), 1e-12);

  std::mt19937_64 rng(c.seed);
  std::vector<QMatrix> pool;
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + 2 * (k % 2);
    std::mt19937_64 shape(static_cast<std::uint64_t>(k % 5));
    const auto base = random_valid_qmatrix(shape, n, k % 3 == 0 ? -1 : 1);
    std::normal_distribution<double> g;
    ComplexMatrix G(n, n);
    for (int r = 0; r < n; ++r)
      for (int cc = 0; cc < n; ++cc) G(r, cc) = {g(rng), g(rng)};
    const ComplexMatrix U = Eigen::HouseholderQR<ComplexMatrix>(G).householderQ();
    pool.push_back(validate_q(U * base.entries() * U.transpose()));
  }
  bool reflexive = true, symmetric = true, transitive = true, trace_bound = true;
  long classes_pairs = 0;
  for (const auto& a : pool) {
    reflexive = reflexive && monoidally_equivalent(a, a);
    trace_bound = trace_bound && invariant_pair(a).trace >= static_cast<double>(a.n()) - 1e-10;
    for (const auto& b : pool) {
      const bool ab = monoidally_equivalent(a, b);
      symmetric = symmetric && ab == monoidally_equivalent(b, a);
      if (ab && &a != &b) ++classes_pairs;
      if (!ab) continue;
      for (const auto& d : pool)
        if (monoidally_equivalent(b, d)) transitive = transitive && monoidally_equivalent(a, d);
    }
  }
  rep.holds("equivalence predicate reflexive on 50 random Q", anchors::foq_invariant, reflexive);
  rep.holds("equivalence predicate symmetric on 50 random Q", anchors::foq_invariant, symmetric);
  rep.holds("equivalence predicate transitive on 50 random Q", anchors::foq_invariant, transitive);
  rep.holds("tr(Q*Q) >= n on 50 random Q", anchors::foq_invariant, trace_bound);
  rep.results()["equivalent_ordered_pairs"] = classes_pairs;
  rep.results()["q_for_identity_3"] = q3;
  rep.results()["sign_convention"] = "sgn(q) = -c, from Q conj(Q) = -sgn(q) 1 for the canonical 2x2 matrix";
  return rep;
}

VerificationReport all_suite(const SuiteConfig& c) {
  VerificationReport rep("all");
  rep.set_seed(c.seed);
  std::vector<std::string> ran, skipped;
  for (const auto& s : suite_catalog()) {
    if (s.name == "all") continue;
    if (s.name == "rotation" && c.q > 0) {
      skipped.push_back("rotation (requires q < 0)");
      continue;
    }
    SuiteConfig sub = c;
    sub.suite = s.name;
    rep.absorb(run_suite(sub), s.name + ": ");
    ran.push_back(s.name);
  }
  rep.results()["suites"] = ran;
  rep.results()["skipped"] = skipped;
  return rep;
}

}  // namespace

VerificationReport run_suite(const SuiteConfig& c) {
  static const std::map<std::string, std::function<VerificationReport(const SuiteConfig&)>> dispatch = {
      {"relations", relations_suite},
      {"podles", podles_suite},
      {"lemma1",
       [](const SuiteConfig& c) { return verify_lemma1(strict_q(c), integer_lmax(c), c.t_grid, c.tol_identity); }},
      {"lemma2", lemma2_suite},
      {"lemma3", [](const SuiteConfig& c) { return verify_lemma3(strict_q(c), integer_lmax(c), c.tol_identity); }},
      {"fredholm", fredholm_suite},
      {"rotation", rotation_suite},
      {"degenerate",
       [](const SuiteConfig& c) { return degenerate_module_check(strict_q(c), integer_lmax(c), c.tol_identity); }},
      {"koszul", koszul_suite},
      {"fusion", fusion_suite},
      {"foq", foq_suite},
      {"all", all_suite},
  };
  auto it = dispatch.find(c.suite);
  if (it == dispatch.end()) throw UsageError("unknown suite '" + c.suite + "' (see 'list')");
  if (!(c.tol_identity > 0) || !(c.tol_decay > 0)) throw UsageError("tolerances must be positive");
  if (c.t_grid < 2) throw UsageError("t-grid needs at least 2 points");
  try {
    QParam check(c.q);
    (void)check;
    auto rep = it->second(c);
    Json params = c.to_json();
    for (auto& [k, v] : rep.parameters().items()) params[k] = v;
    rep.parameters() = params;
    if (c.suite == "all" || c.suite == "foq") rep.set_seed(c.seed);
    return rep;
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

}  // namespace qkk
