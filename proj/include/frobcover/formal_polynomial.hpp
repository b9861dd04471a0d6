#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "frobcover/curve_algebra.hpp"
#include "frobcover/matrix.hpp"

namespace frobcover {

/// The two sets of matrix indeterminates: entries of A on the chart where u
/// is invertible and entries of B on the chart where w is invertible.
enum class FormalSet { Abcd, Greek };

const std::array<std::string, 4>& formal_names(FormalSet set);

/// Polynomial in four formal indeterminates with LocalFraction coefficients.
/// Zero coefficients are never stored, so is_zero() is exact.
class FormalPolynomial {
 public:
  using Exponents = std::array<std::uint32_t, 4>;
  struct ExponentOrder {
    bool operator()(const Exponents& a, const Exponents& b) const noexcept;
  };
  using Terms = std::map<Exponents, LocalFraction, ExponentOrder>;

  FormalPolynomial(CurveContext ctx, FormalSet set);

  static FormalPolynomial constant(const LocalFraction& c, FormalSet set);
  static FormalPolynomial constant(const CurveContext& ctx, FormalSet set, std::int64_t c);
  /// The indeterminate with the given index (a, b, c, d or alpha, ..., delta).
  static FormalPolynomial variable(const CurveContext& ctx, FormalSet set, int index);
  static FormalPolynomial term(const LocalFraction& c, FormalSet set, Exponents exps);

  const CurveContext& context() const noexcept { return ctx_; }
  FormalSet variables() const noexcept { return set_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of a monomial; zero fraction when absent.
  LocalFraction coefficient(const Exponents& exps) const;
  /// Set of total formal degrees occurring.
  std::set<std::uint32_t> formal_degrees() const;
  /// Part of formal degree exactly `deg`.
  FormalPolynomial homogeneous_part(std::uint32_t deg) const;

  FormalPolynomial operator+(const FormalPolynomial& o) const;
  FormalPolynomial operator-(const FormalPolynomial& o) const;
  FormalPolynomial operator*(const FormalPolynomial& o) const;
  FormalPolynomial operator-() const;
  FormalPolynomial scaled(const LocalFraction& c) const;
  FormalPolynomial pow(std::uint64_t e) const;
  /// f^p via Frobenius: sum of c^p X^{pM}; exact in characteristic p.
  FormalPolynomial p_power() const;

  /// Replace each indeterminate i by images[i]; the result lives in the
  /// variable set of the images.
  FormalPolynomial substitute(const std::array<FormalPolynomial, 4>& images) const;

  /// Apply a map to every coefficient; terms whose image is zero are dropped.
  FormalPolynomial map_coefficients(const std::function<LocalFraction(const LocalFraction&)>& f) const;

  ExtFieldElement evaluate(const CurvePoint& point, const std::array<ExtFieldElement, 4>& values) const;

  std::string to_string() const;

  bool operator==(const FormalPolynomial& o) const;

 private:
  void add_term(const Exponents& e, const LocalFraction& c);
  void check_compatible(const FormalPolynomial& o) const;

  CurveContext ctx_;
  FormalSet set_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const FormalPolynomial& f);

using FractionMatrix = Matrix<LocalFraction>;
using FormalMatrix = Matrix<FormalPolynomial>;

/// The 2x2 matrix of indeterminates [[a, b], [c, d]] (or the Greek ones).
FormalMatrix indeterminate_matrix(const CurveContext& ctx, FormalSet set);

/// Embed a fraction matrix as constant formal polynomials.
FormalMatrix to_formal(const FractionMatrix& m, FormalSet set);

}  // namespace frobcover
