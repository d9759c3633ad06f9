#pragma once

// Anchor strings attached to report checks; the suite catalog lists the same constants.
namespace qkk::anchors {

inline constexpr const char* defining_relations = "defining relations of C(SU_q(2)) in the regular representation";
inline constexpr const char* adjoint_tables = "adjoint coefficient tables (x* = transpose of x)";
inline constexpr const char* podles_relations = "Podles sphere relations";
inline constexpr const char* podles_composites = "quadratic expansions of A and B in the generator tables";
inline constexpr const char* haar = "Haar state via the GNS cyclic vector";
inline constexpr const char* star_compat = "star-compatibility of the rescaled tables (omega_t(x)* = omega_t(x*))";
inline constexpr const char* t1_collapse = "m(1,l) = 1 collapses the rescaling";
inline constexpr const char* omega_hom = "omega_t is a *-homomorphism";
inline constexpr const char* omega_counit = "omega_0 implements the trivial representation on e(0)";
inline constexpr const char* continuity = "continuity of the rescaled tables at l = 0";
inline constexpr const char* decay = "uniform decay of the endpoint differences as l grows";
inline constexpr const char* endpoint = "t = 0 endpoint identities (sgn(q) on the diagonal), l > 0";
inline constexpr const char* index = "index of F on the graded line-bundle modules";
inline constexpr const char* compact_commutators = "compactness of [F, x]: decay of commutator tails";
inline constexpr const char* rotation = "rotation homotopy U(t) diag(omega_0, omega) U(t)^-1";
inline constexpr const char* j_symmetry = "j-symmetry of the t = 1 tables; the (H_1, H_-1) module is degenerate";
inline constexpr const char* degenerate_h0 = "degeneracy of the (H_0 minus e(0), H_-2) module at t = 0";
inline constexpr const char* snf = "exact integer elimination";
inline constexpr const char* koszul = "Koszul sequence 0 -> Z[t] -(n-t)-> Z[t] -eps-> Z -> 0 with eps(t) = n";
inline constexpr const char* kgroups = "K-groups of the full free orthogonal quantum group C*-algebra";
inline constexpr const char* fusion = "fusion rule H_k (x) H_1 = H_(k+1) + H_(k-1)";
inline constexpr const char* dimensions = "dimension functions are ring homomorphisms on the fusion ring";
inline constexpr const char* foq_invariant = "monoidal equivalence classes: sign of Q conj(Q) and tr(Q*Q)";
inline constexpr const char* foq_su2 = "unique SU_q(2) parameter for a free orthogonal quantum group";

}  // namespace qkk::anchors
