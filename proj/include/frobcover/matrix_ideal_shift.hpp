#pragma once

// Sampled check that the entries of A B^{-1} - C and of A - C B generate the
// same ideal, via the two multiplication identities that prove it.

#include <cstdint>
#include <vector>

#include "frobcover/check.hpp"
#include "frobcover/finite_field.hpp"
#include "frobcover/matrix.hpp"

namespace frobcover {

/// Element of F_p[t]/(t^k), coefficients lowest degree first.
class TruncatedPolynomial {
 public:
  TruncatedPolynomial(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> coeffs);
  static TruncatedPolynomial constant(std::uint32_t p, std::uint32_t k, std::int64_t c);

  const std::vector<std::uint32_t>& coefficients() const noexcept { return c_; }
  bool is_unit() const noexcept { return c_[0] != 0; }

  TruncatedPolynomial operator+(const TruncatedPolynomial& o) const;
  TruncatedPolynomial operator-(const TruncatedPolynomial& o) const;
  TruncatedPolynomial operator*(const TruncatedPolynomial& o) const;
  TruncatedPolynomial operator-() const;
  /// Throws std::domain_error when the constant term vanishes.
  TruncatedPolynomial inverse() const;

  bool operator==(const TruncatedPolynomial& o) const = default;

 private:
  void check(const TruncatedPolynomial& o) const;

  std::uint32_t p_;
  std::uint32_t k_;
  std::vector<std::uint32_t> c_;
};

/// G B = H and H B^{-1} = G for G = A B^{-1} - C and H = A - C B.
template <CommutativeRing T>
CheckResult shift_identities(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c) {
  const Matrix<T> b_inv = inverse(b);
  const Matrix<T> g = a * b_inv - c;
  const Matrix<T> h = a - c * b;
  CheckLog log;
  log.require(g * b == h, "G B = H");
  log.require(h * b_inv == g, "H B^-1 = G");
  return log.result("ideal shift identities");
}

struct ShiftSampling {
  std::uint32_t p = 7;
  /// k in F_p[t]/(t^k).
  std::uint32_t truncation = 3;
  std::size_t samples = 100;
  std::vector<std::size_t> sizes{2, 3};
};

/// Random (A, B, C) over F_p and over F_p[t]/(t^k) for each size, resampling
/// B until its determinant is a unit.
CheckResult matrix_ideal_shift_check(std::uint64_t seed, const ShiftSampling& sampling = {});

}  // namespace frobcover
