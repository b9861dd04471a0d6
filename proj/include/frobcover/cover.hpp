#pragma once

// Transition data of the trivialising cover, the chart algebras and the
// identities relating them.

#include <array>
#include <cstdint>

#include "frobcover/check.hpp"
#include "frobcover/formal_polynomial.hpp"
#include "frobcover/syzygy.hpp"

namespace frobcover {

/// [[0, -w/u], [u/w, v^2/(uw)]]: column j expresses the j-th frame vector on
/// D+(w) (s2/w, s3/w) in the frame s1/u, s2/u.
FractionMatrix transition_matrix(const CurveContext& fermat);

struct HMatrices {
  FractionMatrix on_u;
  FractionMatrix on_w;
};

/// Column j expresses s_j'/chart in the basis s_i^p / chart^p.
HMatrices h_matrices(const CurveContext& fermat);

/// The frame identities s2/w = (u/w)(s2/u) and s3/w = (v^2/(uw))(s2/u) - (w/u)(s1/u)
/// read off from T, plus the cleared relation u^2 s3 = v^2 s2 - w^2 s1.
CheckResult check_transition_matrix(const GeneratorCatalog& cat, const FractionMatrix& t);

/// s_j'/c = sum_i H_ij s_i^p / c^p componentwise on both charts, as fractions
/// and with denominators cleared by c^{2p+1}.
CheckResult check_base_change(const GeneratorCatalog& cat, const HMatrices& h);

/// det T = 1 and det H_U = det H_W = -2.
CheckResult check_determinants(const FractionMatrix& t, const HMatrices& h);

/// H_U = T^(p) H_W T^{-1}.
CheckResult cocycle_check(const FractionMatrix& t, const HMatrices& h);
CheckResult cocycle_check(const CurveContext& fermat);

struct CoverData {
  FractionMatrix t;
  HMatrices h;
  /// Entries (00, 01, 10, 11) of u^{p+1} (A^(p) adj A - det(A) H_U) in a, b, c, d.
  std::array<FormalPolynomial, 4> relations_u;
  /// Entries of w^{p+1} (B^(p) adj B - det(B) H_W) in alpha, ..., delta.
  std::array<FormalPolynomial, 4> relations_w;
  /// Images of a, b, c, d in the Greek indeterminates.
  std::array<FormalPolynomial, 4> substitution;
};

CoverData build_relations(const CurveContext& fermat);

/// A^(p) adj(A) - det(A) H for a formal matrix A.
FormalMatrix relation_matrix(const FormalMatrix& a, const FractionMatrix& h);

/// Relations are polynomial (no denominators), the A^(p) adj A part has formal
/// degree p+1 and the remaining part degree 2.
CheckResult check_relations(const CoverData& data);

/// a = -(w/u) gamma, b = -(w/u) delta, c = (u/w) alpha + (v^2/(uw)) gamma,
/// d = (u/w) beta + (v^2/(uw)) delta.
std::array<FormalPolynomial, 4> gluing_substitution(const CurveContext& fermat);

/// The substitution equals A = T B entrywise, ad - bc maps to the determinant
/// of B, and the relation matrices satisfy M_U(TB) = T^(p) M_W(B) adj(T).
CheckResult gluing_substitution_check(const CoverData& data, const FractionMatrix& t);
CheckResult gluing_substitution_check(const CoverData& data);

/// Membership identities for w alpha and w beta in the localised chart algebra.
CheckResult section_ring_identity_check(const CurveContext& fermat);

/// The second membership identity with u^2 w delta in place of v^2 w delta.
bool literal_second_membership_holds(const CurveContext& fermat);

/// det(A^(p)) = (det A)^p, det H_U = -2, and det(H_U A) = det(H_U) det(A).
CheckResult det_periodicity_check(const CoverData& data);

/// Image in R[u^{-1}]/(w): terms with w dropped, v^{p+1} replaced by -u^{p+1}.
CurvePolynomial reduce_at_w0(const CurvePolynomial& f);

/// relations_u specialised at w = 0; throws if a coefficient has w in its denominator.
std::array<FormalPolynomial, 4> specialize_w0(const CoverData& data);

/// The four generators a^p d - c b^p, b^p a - a^p b - D, c^p d - c d^p - 2D,
/// d^p a - b c^p with D = ad - bc.
std::array<FormalPolynomial, 4> w0_generators(const CurveContext& fermat);

/// Each specialised relation equals a unit monomial times the matching
/// generator, and none has a constant term.
CheckResult w0_specialization_check(const CoverData& data);

}  // namespace frobcover
