#pragma once

// Exact arithmetic in k[u,v,w]/(u^e + v^e - w^e) over k = F_p and in its
// localizations at monomials u^a w^b.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "frobcover/finite_field.hpp"

namespace frobcover {

/// The Fermat-type curve X^e + Y^e = Z^e in characteristic p.
///
/// Two instances are used: the curve of degree p+1 in u,v,w and, for the
/// Frobenius periodicity on the base curve, the curve of degree d = (p+1)/2
/// in x,y,z. The arithmetic only depends on (p, e); names are for display.
class CurveContext {
 public:
  /// u^{p+1} + v^{p+1} - w^{p+1}.
  static CurveContext fermat(std::uint32_t p);
  /// x^d + y^d - z^d with d = (p+1)/2.
  static CurveContext base_curve(std::uint32_t p);

  CurveContext(std::uint32_t p, std::uint32_t relation_degree, std::array<std::string, 3> names);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t d() const noexcept { return (p_ + 1) / 2; }
  std::uint32_t relation_degree() const noexcept { return e_; }
  const std::array<std::string, 3>& names() const noexcept { return names_; }

  bool operator==(const CurveContext& o) const = default;

 private:
  std::uint32_t p_;
  std::uint32_t e_;
  std::array<std::string, 3> names_;
};

using Monomial = std::array<std::uint32_t, 3>;

/// Graded lexicographic order, largest first (u > v > w).
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    const auto da = a[0] + a[1] + a[2];
    const auto db = b[0] + b[1] + b[2];
    if (da != db) return da > db;
    return a > b;
  }
};

/// Point of the affine cone over the curve, coordinates in some F_{p^m}.
using CurvePoint = std::array<ExtFieldElement, 3>;

/// Element of the curve ring in normal form: every stored monomial has
/// third exponent below the relation degree, and no zero coefficient is stored.
/// Equality is equality of normal forms.
class CurvePolynomial {
 public:
  using Terms = std::map<Monomial, std::uint32_t, GrlexDescending>;

  explicit CurvePolynomial(CurveContext ctx);

  static CurvePolynomial constant(const CurveContext& ctx, std::int64_t c);
  static CurvePolynomial monomial(const CurveContext& ctx, std::int64_t coef, std::uint32_t i,
                                  std::uint32_t j, std::uint32_t k);
  /// 0 -> first variable, 1 -> second, 2 -> third.
  static CurvePolynomial variable(const CurveContext& ctx, int index);
  /// Normal form of an arbitrary (unreduced) list of terms.
  static CurvePolynomial normal_form(const CurveContext& ctx,
                                     std::span<const std::pair<Monomial, std::int64_t>> raw);

  const CurveContext& context() const noexcept { return ctx_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Total degree when homogeneous and nonzero.
  std::optional<std::uint32_t> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
  /// Smallest exponent of the given variable over all terms (0 for the zero polynomial).
  std::uint32_t min_exponent(int var) const;

  CurvePolynomial operator+(const CurvePolynomial& o) const;
  CurvePolynomial operator-(const CurvePolynomial& o) const;
  CurvePolynomial operator*(const CurvePolynomial& o) const;
  CurvePolynomial operator-() const;
  CurvePolynomial& operator+=(const CurvePolynomial& o);
  CurvePolynomial& operator-=(const CurvePolynomial& o);
  CurvePolynomial scaled(std::int64_t c) const;
  CurvePolynomial pow(std::uint64_t e) const;
  /// f^p computed termwise: coefficients are fixed by Frobenius.
  CurvePolynomial p_power() const;
  /// Multiply by u^i v^j w^k.
  CurvePolynomial shifted(std::uint32_t i, std::uint32_t j, std::uint32_t k) const;
  /// Exact division by u^i w^k; requires every term to carry u^i and w^k.
  CurvePolynomial divide_monomial(std::uint32_t i, std::uint32_t k) const;
  /// Exact quotient by the third variable in the ring, if it exists. Unlike
  /// divide_monomial this sees factors hidden by the normal form, e.g. w^e.
  std::optional<CurvePolynomial> divide_by_third() const;

  /// Ring homomorphism to the coordinate field. Throws std::invalid_argument
  /// if the point is not on the curve.
  ExtFieldElement evaluate(const CurvePoint& point) const;

  /// Deterministic rendering, graded lexicographic u > v > w, coefficients
  /// printed as symmetric residues.
  std::string to_string() const;

  bool operator==(const CurvePolynomial& o) const;

 private:
  void add_term(const Monomial& m, std::uint64_t coef);
  void check_context(const CurvePolynomial& o) const;

  CurveContext ctx_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const CurvePolynomial& f);

/// Whether the point satisfies X^e + Y^e = Z^e.
bool on_curve(const CurveContext& ctx, const CurvePoint& point);

/// Element f / (u^a w^b) of the localization at the first and third variable.
/// Common monomial factors are cancelled on construction.
class LocalFraction {
 public:
  explicit LocalFraction(CurvePolynomial numerator, std::uint32_t u_exp = 0, std::uint32_t w_exp = 0);

  static LocalFraction constant(const CurveContext& ctx, std::int64_t c);
  /// c u^i v^j w^k / (u^a w^b).
  static LocalFraction monomial(const CurveContext& ctx, std::int64_t c, Monomial num, std::uint32_t a,
                                std::uint32_t b);

  const CurvePolynomial& numerator() const noexcept { return num_; }
  std::uint32_t u_exponent() const noexcept { return u_exp_; }
  std::uint32_t w_exponent() const noexcept { return w_exp_; }
  const CurveContext& context() const noexcept { return num_.context(); }
  bool is_zero() const noexcept { return num_.is_zero(); }

  LocalFraction operator+(const LocalFraction& o) const;
  LocalFraction operator-(const LocalFraction& o) const;
  LocalFraction operator*(const LocalFraction& o) const;
  LocalFraction operator-() const;
  LocalFraction pow(std::uint64_t e) const;
  /// Numerator and denominator raised to the p-th power separately.
  LocalFraction p_power() const;

  /// If this fraction is c u^s w^t for a nonzero constant c (integer s, t),
  /// returns it in that shape.
  struct Unit {
    std::uint32_t coefficient;
    std::int64_t u_power;
    std::int64_t w_power;
  };
  std::optional<Unit> as_unit() const;
  bool is_unit() const { return as_unit().has_value(); }
  /// Throws std::domain_error unless the fraction is a unit of the localization.
  LocalFraction inverse() const;

  /// Requires nonzero first and third coordinates.
  ExtFieldElement evaluate(const CurvePoint& point) const;

  std::string to_string() const;

  /// Cross-multiplication test.
  bool operator==(const LocalFraction& o) const;

 private:
  void reduce();

  CurvePolynomial num_;
  std::uint32_t u_exp_;
  std::uint32_t w_exp_;
};

bool fraction_equal(const LocalFraction& x, const LocalFraction& y);

std::ostream& operator<<(std::ostream& os, const LocalFraction& f);

// ---------------------------------------------------------------------------
// Curve points

/// Every nonzero point of the affine cone over the curve with coordinates in
/// the field, enumerated over (u, v) and then roots w. Requires the field to be
/// enumerable.
std::vector<CurvePoint> enumerate_curve_points(const ExtensionField& field, const CurveContext& ctx,
                                               std::uint64_t cap = kDefaultEnumerationCap);

struct PointSampling {
  /// Only return points with first and third coordinate nonzero, as needed
  /// for evaluating LocalFractions.
  bool require_unit_uw = true;
};

/// `count` distinct random cone points, deterministic in the seed. Throws
/// std::runtime_error if fewer exist.
std::vector<CurvePoint> random_curve_points(const ExtensionField& field, const CurveContext& ctx,
                                            std::size_t count, std::uint64_t seed,
                                            PointSampling sampling = {});

}  // namespace frobcover
