#pragma once

// Explicit syzygies on the curve x^d + y^d = z^d and on the Fermat curve of
// degree p+1, and the identities relating them.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "frobcover/check.hpp"
#include "frobcover/curve_algebra.hpp"

namespace frobcover {

using Triple = std::array<CurvePolynomial, 3>;

/// (a1, a2, a3) with a1 f1 + a2 f2 + a3 f3 = 0, viewed as a section of
/// Syz(f1, f2, f3)(twist). total_degree = deg a_i + deg f_i - twist.
struct SyzygyTriple {
  std::string name;
  Triple components;
  Triple data;
  std::int64_t twist = 0;
  std::int64_t total_degree = 0;
};

/// Passes iff sum a_i f_i normal-forms to zero and deg a_i + deg f_i equals
/// twist + total_degree for every nonzero a_i. Throws std::invalid_argument
/// for non-homogeneous entries or mixed curves.
CheckResult check_syzygy(const SyzygyTriple& t);

/// Sum of c_i t_i componentwise.
Triple combine(const std::array<CurvePolynomial, 3>& coefficients, const std::array<Triple, 3>& triples);

bool is_zero_triple(const Triple& t);

/// Copy of t with the sign of one term of one component flipped; terms are
/// counted in display order. Throws std::out_of_range if there is no such term.
SyzygyTriple flip_term_sign(const SyzygyTriple& t, int component, std::size_t term);

/// The generators for one prime. Entries on the base curve (x, y, z) are
/// R0..R3, phi(e1..e3), psi(e1..e3) and kernel; s1..s3 and s1'..s3' live on
/// the Fermat curve (u, v, w).
struct GeneratorCatalog {
  CurveContext base;
  CurveContext fermat;
  std::vector<SyzygyTriple> entries;

  const SyzygyTriple& at(const std::string& name) const;
  SyzygyTriple& at(const std::string& name);
};

GeneratorCatalog build_catalog(std::uint32_t p);

/// Names in catalog order.
const std::vector<std::string>& catalog_names();

/// Koszul map e1 -> (x,0,-z), e2 -> (y,z,0), e3 -> (0,x,y) in its printed
/// labelling. Its kernel is (-y, x, -z); the catalog's psi(e_i) use the order
/// compatible with the kernel (z, -y, x) instead.
std::array<SyzygyTriple, 3> printed_koszul_map(const CurveContext& base);

/// phi((f), (g)) = (z^{d-1} f1 + g1, z^{d-1} f2 + g2, f3 + z g3).
Triple phi_map(const CurveContext& base, const Triple& f, const Triple& g);

/// Checks that each catalog entry is a syzygy and that the listed phi(e_i)
/// agree with phi applied to R1, R2, R3.
CheckResult check_catalog(const GeneratorCatalog& cat);

/// z phi(e1) - y phi(e2) + x phi(e3) = 0 and the same for psi.
CheckResult check_kernel_relation(const GeneratorCatalog& cat);

/// The Frobenius periodicity on generators, on both curves.
struct PeriodicityMap {
  std::array<SyzygyTriple, 3> base_sources;  // phi(e_i)
  std::array<SyzygyTriple, 3> base_images;   // (-y,x,0), (-z,0,x), (0,-z,y)
  std::array<SyzygyTriple, 3> sources;       // s_i'
  std::array<SyzygyTriple, 3> images;        // s_i
};

PeriodicityMap periodicity_map(const GeneratorCatalog& cat);

/// Steps (i)-(iv): images and sources are syzygies of total degree 1 (resp. 0
/// on the base curve), the relation w^2 s1' - v^2 s2' + u^2 s3' = 0 maps to
/// the relation among the images, and (a1,a2,a3) -> (a3,-a2,a1) sends psi(e_i)
/// to the image of phi(e_i). Failing steps are named in the detail.
CheckResult check_alpha(const GeneratorCatalog& cat, const PeriodicityMap& alpha);
CheckResult check_alpha(const GeneratorCatalog& cat);

/// x -> u^2, y -> v^2, z -> w^2 carries the base-curve map to the Fermat one.
CheckResult check_alpha_substitution(const GeneratorCatalog& cat, const PeriodicityMap& alpha);

/// Ring map from the base curve to the Fermat curve substituting squares.
CurvePolynomial substitute_squares(const CurvePolynomial& f, const CurveContext& fermat);

/// Some 2x2 minor of the matrix with rows r, s is nonzero.
bool rows_independent(const Triple& r, const Triple& s);

/// (R0, R1) and (R2, R3) are independent.
CheckResult check_independence(const GeneratorCatalog& cat);

}  // namespace frobcover
