#include "frobcover/finite_field.hpp"

#include <numeric>
#include <sstream>

namespace frobcover {

namespace {

using Poly = std::vector<std::uint32_t>;  // dense over F_p, low coefficient first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) { return mod_pow(a, p - 2, p); }

Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_rem(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = poly_rem(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree m is irreducible iff gcd(x^{p^k} - x, f) = 1 for k <= m/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  if (f[0] == 0) return false;
  Poly h{0, 1};
  for (std::size_t k = 1; k <= m / 2; ++k) {
    h = poly_powmod(h, p, f, p);
    Poly g = h;
    g.resize(std::max<std::size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    if (g.empty()) return false;
    if (poly_gcd(f, g, p).size() != 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exponent) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exponent; ++i) {
    if (base != 0 && r > UINT64_MAX / base) throw std::overflow_error("integer power overflows 64 bits");
    r *= base;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (exponent > 0) {
    if (exponent & 1) r = r * base % p;
    base = base * base % p;
    exponent >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint64_t multiplicative_order_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("order of zero is undefined");
  std::uint64_t n = p - 1;
  for (std::uint64_t q : prime_factors(p - 1)) {
    while (n % q == 0 && mod_pow(a, n / q, p) == 1) n /= q;
  }
  return n;
}

// ---------------------------------------------------------------------------
// PrimeFieldElement

PrimeFieldElement::PrimeFieldElement(std::uint32_t p, std::int64_t value) : p_(p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("modulus must be an odd prime");
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  value_ = static_cast<std::uint32_t>(r);
}

namespace {
void require_same_modulus(const PrimeFieldElement& a, const PrimeFieldElement& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("operands lie in different prime fields");
}
}  // namespace

PrimeFieldElement PrimeFieldElement::operator+(const PrimeFieldElement& o) const {
  require_same_modulus(*this, o);
  return {p_, static_cast<std::int64_t>(value_) + o.value_};
}
PrimeFieldElement PrimeFieldElement::operator-(const PrimeFieldElement& o) const {
  require_same_modulus(*this, o);
  return {p_, static_cast<std::int64_t>(value_) - o.value_};
}
PrimeFieldElement PrimeFieldElement::operator*(const PrimeFieldElement& o) const {
  require_same_modulus(*this, o);
  return {p_, static_cast<std::int64_t>(std::uint64_t{value_} * o.value_ % p_)};
}
PrimeFieldElement PrimeFieldElement::operator-() const { return {p_, -static_cast<std::int64_t>(value_)}; }
PrimeFieldElement PrimeFieldElement::pow(std::uint64_t e) const { return {p_, mod_pow(value_, e, p_)}; }
PrimeFieldElement PrimeFieldElement::inverse() const {
  if (value_ == 0) throw std::domain_error("zero has no inverse");
  return pow(p_ - 2);
}

std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& a) { return os << a.value(); }

// ---------------------------------------------------------------------------
// ExtensionField

ExtensionField ExtensionField::make(std::uint32_t p, std::uint32_t degree) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("characteristic must be an odd prime");
  if (degree < 1) throw std::invalid_argument("extension degree must be at least 1");
  if (p >= (1u << 16)) throw std::invalid_argument("characteristic must be below 2^16");
  const std::uint64_t order = checked_pow(p, degree);
  // Monic candidates x^m + (lower part), lower part enumerated by base-p index.
  // An irreducible polynomial of every degree exists, so the budget is a bug guard.
  const std::uint64_t budget = order;
  for (std::uint64_t idx = 0; idx < budget; ++idx) {
    Poly f(degree + 1, 0);
    std::uint64_t t = idx;
    for (std::uint32_t i = 0; i < degree; ++i) {
      f[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    f[degree] = 1;
    if (is_irreducible(f, p)) {
      return ExtensionField(std::make_shared<const detail::FieldData>(
          detail::FieldData{p, degree, std::move(f), order}));
    }
  }
  throw std::logic_error("no irreducible modulus found");
}

ExtFieldElement ExtensionField::zero() const {
  return ExtFieldElement(data_, std::vector<std::uint32_t>(data_->degree, 0));
}

ExtFieldElement ExtensionField::one() const { return constant(1); }

ExtFieldElement ExtensionField::constant(std::int64_t c) const {
  std::vector<std::uint32_t> v(data_->degree, 0);
  std::int64_t r = c % static_cast<std::int64_t>(data_->p);
  if (r < 0) r += data_->p;
  v[0] = static_cast<std::uint32_t>(r);
  return ExtFieldElement(data_, std::move(v));
}

ExtFieldElement ExtensionField::root() const {
  if (data_->degree == 1) {
    // x = -f_0 in F_p[x]/(x + f_0).
    return constant(-static_cast<std::int64_t>(data_->modulus[0]));
  }
  std::vector<std::uint32_t> v(data_->degree, 0);
  v[1] = 1;
  return ExtFieldElement(data_, std::move(v));
}

ExtFieldElement ExtensionField::from_coefficients(std::vector<std::uint32_t> coeffs) const {
  for (auto& c : coeffs) c %= data_->p;
  Poly r = poly_rem(std::move(coeffs), data_->modulus, data_->p);
  r.resize(data_->degree, 0);
  return ExtFieldElement(data_, std::move(r));
}

ExtFieldElement ExtensionField::element_at(std::uint64_t index) const {
  if (index >= data_->order) throw std::out_of_range("element index outside field");
  std::vector<std::uint32_t> v(data_->degree, 0);
  for (std::uint32_t i = 0; i < data_->degree; ++i) {
    v[i] = static_cast<std::uint32_t>(index % data_->p);
    index /= data_->p;
  }
  return ExtFieldElement(data_, std::move(v));
}

void ExtensionField::require_enumerable(std::uint64_t cap) const {
  if (data_->order > cap) {
    throw EnumerationLimitError("field of " + std::to_string(data_->order) +
                                " elements exceeds enumeration cap " + std::to_string(cap));
  }
}

std::string ExtensionField::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = data_->modulus.size(); i-- > 0;) {
    const std::uint32_t c = data_->modulus[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i > 0) os << (c != 1 ? "*" : "") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

bool ExtensionField::operator==(const ExtensionField& o) const {
  return data_ == o.data_ || (data_->p == o.data_->p && data_->modulus == o.data_->modulus);
}

// ---------------------------------------------------------------------------
// ExtFieldElement

void ExtFieldElement::check_same_field(const ExtFieldElement& o) const {
  if (field_ != o.field_ && !(field_->p == o.field_->p && field_->modulus == o.field_->modulus)) {
    throw std::invalid_argument("elements belong to different fields");
  }
}

bool ExtFieldElement::is_zero() const noexcept {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool ExtFieldElement::is_one() const noexcept {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

std::uint64_t ExtFieldElement::index() const noexcept {
  std::uint64_t r = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * field_->p + coeffs_[i];
  return r;
}

ExtFieldElement ExtFieldElement::operator+(const ExtFieldElement& o) const {
  ExtFieldElement r = *this;
  r += o;
  return r;
}

ExtFieldElement& ExtFieldElement::operator+=(const ExtFieldElement& o) {
  check_same_field(o);
  const std::uint32_t p = field_->p;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::uint32_t s = coeffs_[i] + o.coeffs_[i];
    coeffs_[i] = s >= p ? s - p : s;
  }
  return *this;
}

ExtFieldElement ExtFieldElement::operator-(const ExtFieldElement& o) const { return *this + (-o); }

ExtFieldElement ExtFieldElement::operator-() const {
  ExtFieldElement r = *this;
  for (auto& c : r.coeffs_) c = c == 0 ? 0 : field_->p - c;
  return r;
}

ExtFieldElement ExtFieldElement::operator*(const ExtFieldElement& o) const {
  check_same_field(o);
  const std::uint32_t p = field_->p;
  const std::size_t m = field_->degree;
  if (m == 1) {
    return ExtFieldElement(field_, {static_cast<std::uint32_t>(std::uint64_t{coeffs_[0]} * o.coeffs_[0] % p)});
  }
  std::vector<std::uint64_t> prod(2 * m - 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) prod[i + j] += std::uint64_t{coeffs_[i]} * o.coeffs_[j];
    // Keep partial sums bounded; p < 2^32 and m is small.
    if ((i & 7) == 7) {
      for (auto& v : prod) v %= p;
    }
  }
  for (auto& v : prod) v %= p;
  const auto& f = field_->modulus;
  for (std::size_t k = 2 * m - 2; k >= m; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::size_t i = 0; i < m; ++i) {
      prod[k - m + i] = (prod[k - m + i] + (p - c) * f[i]) % p;
    }
  }
  std::vector<std::uint32_t> r(m);
  for (std::size_t i = 0; i < m; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
  return ExtFieldElement(field_, std::move(r));
}

ExtFieldElement& ExtFieldElement::operator*=(const ExtFieldElement& o) {
  *this = *this * o;
  return *this;
}

ExtFieldElement ExtFieldElement::pow(std::uint64_t e) const {
  ExtFieldElement result = field().one();
  ExtFieldElement base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

ExtFieldElement ExtFieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("zero has no inverse");
  return pow(field_->order - 2);
}

bool ExtFieldElement::operator==(const ExtFieldElement& o) const {
  check_same_field(o);
  return coeffs_ == o.coeffs_;
}

std::string ExtFieldElement::to_string() const {
  if (coeffs_.size() == 1) return std::to_string(coeffs_[0]);
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExtFieldElement& a) { return os << a.to_string(); }

// ---------------------------------------------------------------------------

std::uint64_t multiplicative_order(const ExtFieldElement& a) {
  if (a.is_zero()) throw std::domain_error("order of zero is undefined");
  const std::uint64_t group = a.field().order() - 1;
  std::uint64_t n = group;
  for (std::uint64_t q : prime_factors(group)) {
    while (n % q == 0 && a.pow(n / q).is_one()) n /= q;
  }
  return n;
}

ExtFieldElement find_generator(const ExtensionField& field, std::uint64_t cap) {
  field.require_enumerable(cap);
  const std::uint64_t group = field.order() - 1;
  const auto factors = prime_factors(group);
  for (std::uint64_t idx = 1; idx < field.order(); ++idx) {
    ExtFieldElement g = field.element_at(idx);
    bool generator = true;
    for (std::uint64_t q : factors) {
      if (g.pow(group / q).is_one()) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw std::logic_error("multiplicative group has no generator");
}

bool power_equation_solvable(const ExtFieldElement& a, std::uint64_t n) {
  if (a.is_zero()) throw std::domain_error("power equation with zero right-hand side");
  if (n == 0) throw std::domain_error("exponent must be positive");
  const std::uint64_t group = a.field().order() - 1;
  return a.pow(group / std::gcd(n, group)).is_one();
}

std::vector<ExtFieldElement> solve_power_equation(const ExtensionField& field, std::uint64_t n,
                                                  const ExtFieldElement& a, std::uint64_t cap) {
  if (a.is_zero()) throw std::domain_error("power equation with zero right-hand side");
  if (n == 0) throw std::domain_error("exponent must be positive");
  if (!(a.field() == field)) throw std::invalid_argument("right-hand side is not in the field");
  field.require_enumerable(cap);
  std::vector<ExtFieldElement> out;
  for (std::uint64_t idx = 1; idx < field.order(); ++idx) {
    ExtFieldElement x = field.element_at(idx);
    if (x.pow(n) == a) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace frobcover
