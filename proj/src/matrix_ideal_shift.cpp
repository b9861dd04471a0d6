#include <random>
#include <stdexcept>
#include <string>

#include "frobcover/matrix_ideal_shift.hpp"

namespace frobcover {

TruncatedPolynomial::TruncatedPolynomial(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> coeffs)
    : p_(p), k_(k), c_(std::move(coeffs)) {
  if (k_ == 0) throw std::invalid_argument("truncation order must be positive");
  if (c_.size() > k_) throw std::invalid_argument("too many coefficients for t^k truncation");
  c_.resize(k_, 0);
  for (auto& x : c_) x %= p_;
}

TruncatedPolynomial TruncatedPolynomial::constant(std::uint32_t p, std::uint32_t k, std::int64_t c) {
  const std::int64_t r = ((c % static_cast<std::int64_t>(p)) + p) % p;
  return TruncatedPolynomial(p, k, {static_cast<std::uint32_t>(r)});
}

void TruncatedPolynomial::check(const TruncatedPolynomial& o) const {
  if (p_ != o.p_ || k_ != o.k_) throw std::invalid_argument("truncated polynomials over different rings");
}

TruncatedPolynomial TruncatedPolynomial::operator+(const TruncatedPolynomial& o) const {
  check(o);
  std::vector<std::uint32_t> r(k_);
  for (std::uint32_t i = 0; i < k_; ++i) r[i] = (c_[i] + o.c_[i]) % p_;
  return TruncatedPolynomial(p_, k_, std::move(r));
}

TruncatedPolynomial TruncatedPolynomial::operator-(const TruncatedPolynomial& o) const { return *this + (-o); }

TruncatedPolynomial TruncatedPolynomial::operator-() const {
  std::vector<std::uint32_t> r(k_);
  for (std::uint32_t i = 0; i < k_; ++i) r[i] = (p_ - c_[i]) % p_;
  return TruncatedPolynomial(p_, k_, std::move(r));
}

TruncatedPolynomial TruncatedPolynomial::operator*(const TruncatedPolynomial& o) const {
  check(o);
  std::vector<std::uint64_t> acc(k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    for (std::uint32_t j = 0; i + j < k_; ++j) acc[i + j] = (acc[i + j] + std::uint64_t{c_[i]} * o.c_[j]) % p_;
  }
  return TruncatedPolynomial(p_, k_, std::vector<std::uint32_t>(acc.begin(), acc.end()));
}

TruncatedPolynomial TruncatedPolynomial::inverse() const {
  if (!is_unit()) throw std::domain_error("truncated polynomial with zero constant term is not invertible");
  // Solve (sum c_i t^i)(sum r_j t^j) = 1 degree by degree.
  const std::uint32_t inv0 = mod_pow(c_[0], p_ - 2, p_);
  std::vector<std::uint32_t> r(k_, 0);
  r[0] = inv0;
  for (std::uint32_t n = 1; n < k_; ++n) {
    std::uint64_t s = 0;
    for (std::uint32_t i = 1; i <= n; ++i) s = (s + std::uint64_t{c_[i]} * r[n - i]) % p_;
    r[n] = static_cast<std::uint32_t>((p_ - s) % p_ * inv0 % p_);
  }
  return TruncatedPolynomial(p_, k_, std::move(r));
}

namespace {

template <class T, class Gen>
Matrix<T> random_matrix(std::size_t n, Gen&& gen) {
  std::vector<T> e;
  e.reserve(n * n);
  for (std::size_t i = 0; i < n * n; ++i) e.push_back(gen());
  return Matrix<T>(n, n, std::move(e));
}

template <class T, class Gen, class IsUnit>
void run_samples(CheckLog& log, const std::string& ring, std::size_t n, std::size_t samples, Gen&& gen,
                 IsUnit&& is_unit) {
  for (std::size_t s = 0; s < samples; ++s) {
    const Matrix<T> a = random_matrix<T>(n, gen);
    const Matrix<T> c = random_matrix<T>(n, gen);
    Matrix<T> b = random_matrix<T>(n, gen);
    while (!is_unit(determinant(b))) b = random_matrix<T>(n, gen);
    log.require(shift_identities(a, b, c), ring + " n=" + std::to_string(n) + " sample " + std::to_string(s));
  }
}

}  // namespace

CheckResult matrix_ideal_shift_check(std::uint64_t seed, const ShiftSampling& sampling) {
  if (!is_prime(sampling.p) || sampling.p < 3) throw std::invalid_argument("sampling prime must be an odd prime");
  std::mt19937_64 rng(seed);
  const std::uint32_t p = sampling.p;
  const std::uint32_t k = sampling.truncation;
  CheckLog log;
  for (std::size_t n : sampling.sizes) {
    run_samples<PrimeFieldElement>(
        log, "F_" + std::to_string(p), n, sampling.samples,
        [&] { return PrimeFieldElement(p, static_cast<std::int64_t>(rng() % p)); },
        [](const PrimeFieldElement& x) { return !x.is_zero(); });
    run_samples<TruncatedPolynomial>(
        log, "F_" + std::to_string(p) + "[t]/(t^" + std::to_string(k) + ")", n, sampling.samples,
        [&] {
          std::vector<std::uint32_t> c(k);
          for (auto& x : c) x = static_cast<std::uint32_t>(rng() % p);
          return TruncatedPolynomial(p, k, std::move(c));
        },
        [](const TruncatedPolynomial& x) { return x.is_unit(); });
  }
  return log.result("ideal shift identities on random samples");
}

}  // namespace frobcover
