#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace frobcover {

/// Operations that scan a whole field refuse fields with more elements than this.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 22;

/// Thrown when a full-field scan would exceed the configured enumeration cap.
class EnumerationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);

/// Checked integer power; throws std::overflow_error when the result exceeds 64 bits.
std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exponent);

/// Prime factors of n without multiplicity, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint32_t p);

/// Multiplicative order of a unit of Z/p.
std::uint64_t multiplicative_order_mod(std::uint32_t a, std::uint32_t p);

/// Residue in [0, p) of an odd prime modulus p.
class PrimeFieldElement {
 public:
  PrimeFieldElement(std::uint32_t p, std::int64_t value);

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return value_ == 0; }

  PrimeFieldElement operator+(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-(const PrimeFieldElement& o) const;
  PrimeFieldElement operator*(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-() const;
  PrimeFieldElement pow(std::uint64_t e) const;
  PrimeFieldElement inverse() const;

  bool operator==(const PrimeFieldElement& o) const = default;

 private:
  std::uint32_t p_;
  std::uint32_t value_;
};

std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& a);

class ExtFieldElement;

namespace detail {
struct FieldData {
  std::uint32_t p;
  std::uint32_t degree;
  std::vector<std::uint32_t> modulus;  // monic, size degree + 1, low coefficient first
  std::uint64_t order;                 // p^degree
};
}  // namespace detail

/// The field F_{p^m} = F_p[x]/(f) for a monic irreducible f of degree m.
///
/// Copies share the same immutable modulus. Two handles compare equal when
/// they describe the same (p, modulus).
class ExtensionField {
 public:
  /// Deterministic: picks the first irreducible monic modulus in the order of
  /// its coefficient vector read as a base-p integer (constant term least
  /// significant).
  static ExtensionField make(std::uint32_t p, std::uint32_t degree);

  std::uint32_t characteristic() const noexcept { return data_->p; }
  std::uint32_t degree() const noexcept { return data_->degree; }
  std::uint64_t order() const noexcept { return data_->order; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return data_->modulus; }

  ExtFieldElement zero() const;
  ExtFieldElement one() const;
  ExtFieldElement constant(std::int64_t c) const;
  /// The class of x, a root of the modulus.
  ExtFieldElement root() const;
  ExtFieldElement from_coefficients(std::vector<std::uint32_t> coeffs) const;
  /// Inverse of ExtFieldElement::index().
  ExtFieldElement element_at(std::uint64_t index) const;

  /// Throws EnumerationLimitError if the field is larger than cap.
  void require_enumerable(std::uint64_t cap) const;

  std::string modulus_string() const;

  bool operator==(const ExtensionField& o) const;

 private:
  explicit ExtensionField(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

  std::shared_ptr<const detail::FieldData> data_;
  friend class ExtFieldElement;
};

/// Element of F_{p^m}, stored as its canonical residue of degree < m.
class ExtFieldElement {
 public:
  ExtensionField field() const { return ExtensionField(field_); }
  const std::vector<std::uint32_t>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// Position in the lexicographic enumeration: sum of c_i p^i.
  std::uint64_t index() const noexcept;

  ExtFieldElement operator+(const ExtFieldElement& o) const;
  ExtFieldElement operator-(const ExtFieldElement& o) const;
  ExtFieldElement operator*(const ExtFieldElement& o) const;
  ExtFieldElement operator-() const;
  ExtFieldElement& operator+=(const ExtFieldElement& o);
  ExtFieldElement& operator*=(const ExtFieldElement& o);

  ExtFieldElement pow(std::uint64_t e) const;
  /// Throws std::domain_error for zero.
  ExtFieldElement inverse() const;
  ExtFieldElement frobenius() const { return pow(field_->p); }

  bool operator==(const ExtFieldElement& o) const;

  std::string to_string() const;

 private:
  ExtFieldElement(std::shared_ptr<const detail::FieldData> f, std::vector<std::uint32_t> c)
      : field_(std::move(f)), coeffs_(std::move(c)) {}

  void check_same_field(const ExtFieldElement& o) const;

  std::shared_ptr<const detail::FieldData> field_;
  std::vector<std::uint32_t> coeffs_;
  friend class ExtensionField;
};

std::ostream& operator<<(std::ostream& os, const ExtFieldElement& a);

inline ExtensionField make_extension_field(std::uint32_t p, std::uint32_t degree) {
  return ExtensionField::make(p, degree);
}

/// Least n >= 1 with a^n = 1. Throws std::domain_error for a = 0.
std::uint64_t multiplicative_order(const ExtFieldElement& a);

/// Smallest element (enumeration order) of multiplicative order |F| - 1.
ExtFieldElement find_generator(const ExtensionField& field,
                               std::uint64_t cap = kDefaultEnumerationCap);

/// Whether x^n = a has a solution, by the criterion a^((q-1)/gcd(n,q-1)) = 1.
bool power_equation_solvable(const ExtFieldElement& a, std::uint64_t n);

/// All x with x^n = a, in enumeration order, found by scanning the field.
/// Throws std::domain_error for a = 0 or n = 0.
std::vector<ExtFieldElement> solve_power_equation(const ExtensionField& field, std::uint64_t n,
                                                  const ExtFieldElement& a,
                                                  std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace frobcover
