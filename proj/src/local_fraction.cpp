#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "frobcover/curve_algebra.hpp"

namespace frobcover {

LocalFraction::LocalFraction(CurvePolynomial numerator, std::uint32_t u_exp, std::uint32_t w_exp)
    : num_(std::move(numerator)), u_exp_(u_exp), w_exp_(w_exp) {
  reduce();
}

LocalFraction LocalFraction::constant(const CurveContext& ctx, std::int64_t c) {
  return LocalFraction(CurvePolynomial::constant(ctx, c));
}

LocalFraction LocalFraction::monomial(const CurveContext& ctx, std::int64_t c, Monomial num, std::uint32_t a,
                                      std::uint32_t b) {
  return LocalFraction(CurvePolynomial::monomial(ctx, c, num[0], num[1], num[2]), a, b);
}

void LocalFraction::reduce() {
  if (num_.is_zero()) {
    u_exp_ = 0;
    w_exp_ = 0;
    return;
  }
  const std::uint32_t s = std::min(u_exp_, num_.min_exponent(0));
  const std::uint32_t t = std::min(w_exp_, num_.min_exponent(2));
  if (s > 0 || t > 0) {
    num_ = num_.divide_monomial(s, t);
    u_exp_ -= s;
    w_exp_ -= t;
  }
  while (w_exp_ > 0) {
    auto q = num_.divide_by_third();
    if (!q) break;
    num_ = std::move(*q);
    --w_exp_;
  }
}

LocalFraction LocalFraction::operator+(const LocalFraction& o) const {
  const std::uint32_t a = std::max(u_exp_, o.u_exp_);
  const std::uint32_t b = std::max(w_exp_, o.w_exp_);
  return LocalFraction(num_.shifted(a - u_exp_, 0, b - w_exp_) + o.num_.shifted(a - o.u_exp_, 0, b - o.w_exp_),
                       a, b);
}

LocalFraction LocalFraction::operator-(const LocalFraction& o) const { return *this + (-o); }

LocalFraction LocalFraction::operator*(const LocalFraction& o) const {
  return LocalFraction(num_ * o.num_, u_exp_ + o.u_exp_, w_exp_ + o.w_exp_);
}

LocalFraction LocalFraction::operator-() const { return LocalFraction(-num_, u_exp_, w_exp_); }

LocalFraction LocalFraction::pow(std::uint64_t e) const {
  return LocalFraction(num_.pow(e), static_cast<std::uint32_t>(u_exp_ * e), static_cast<std::uint32_t>(w_exp_ * e));
}

LocalFraction LocalFraction::p_power() const {
  const std::uint32_t p = context().p();
  return LocalFraction(num_.p_power(), u_exp_ * p, w_exp_ * p);
}

std::optional<LocalFraction::Unit> LocalFraction::as_unit() const {
  const auto deg = num_.homogeneous_degree();
  if (!deg) return std::nullopt;
  // In normal form the u-adic valuation is read off termwise; the w part may
  // be hidden behind the relation, so compare against NF(u^s w^t).
  const std::uint32_t s = num_.min_exponent(0);
  const std::uint32_t t = *deg - s;
  const CurvePolynomial shape = CurvePolynomial::monomial(context(), 1, s, 0, t);
  const auto& [lead, lead_coef] = *shape.terms().begin();
  const auto it = num_.terms().find(lead);
  if (it == num_.terms().end()) return std::nullopt;
  const std::uint32_t p = context().p();
  const std::uint32_t c =
      static_cast<std::uint32_t>(std::uint64_t{it->second} * mod_pow(lead_coef, p - 2, p) % p);
  if (!(shape.scaled(c) == num_)) return std::nullopt;
  return Unit{c, static_cast<std::int64_t>(s) - u_exp_, static_cast<std::int64_t>(t) - w_exp_};
}

LocalFraction LocalFraction::inverse() const {
  const auto unit = as_unit();
  if (!unit) throw std::domain_error("fraction is not a unit of the localization: " + to_string());
  const std::uint32_t p = context().p();
  const std::int64_t c = mod_pow(unit->coefficient, p - 2, p);
  const auto up = -unit->u_power;
  const auto wp = -unit->w_power;
  return LocalFraction(CurvePolynomial::monomial(context(), c, up > 0 ? static_cast<std::uint32_t>(up) : 0, 0,
                                                 wp > 0 ? static_cast<std::uint32_t>(wp) : 0),
                       up < 0 ? static_cast<std::uint32_t>(-up) : 0, wp < 0 ? static_cast<std::uint32_t>(-wp) : 0);
}

ExtFieldElement LocalFraction::evaluate(const CurvePoint& point) const {
  ExtFieldElement value = num_.evaluate(point);
  if (u_exp_ == 0 && w_exp_ == 0) return value;
  if ((u_exp_ > 0 && point[0].is_zero()) || (w_exp_ > 0 && point[2].is_zero())) {
    throw std::domain_error("denominator vanishes at the point");
  }
  return value * (point[0].pow(u_exp_) * point[2].pow(w_exp_)).inverse();
}

std::string LocalFraction::to_string() const {
  if (u_exp_ == 0 && w_exp_ == 0) return num_.to_string();
  std::ostringstream os;
  os << (num_.size() > 1 ? "(" + num_.to_string() + ")" : num_.to_string()) << "/";
  const auto& names = context().names();
  const bool both = u_exp_ > 0 && w_exp_ > 0;
  if (both) os << "(";
  if (u_exp_ > 0) os << names[0] << (u_exp_ > 1 ? "^" + std::to_string(u_exp_) : "");
  if (both) os << "*";
  if (w_exp_ > 0) os << names[2] << (w_exp_ > 1 ? "^" + std::to_string(w_exp_) : "");
  if (both) os << ")";
  return os.str();
}

bool LocalFraction::operator==(const LocalFraction& o) const { return fraction_equal(*this, o); }

bool fraction_equal(const LocalFraction& x, const LocalFraction& y) {
  if (!(x.context() == y.context())) throw std::invalid_argument("fractions live on different curves");
  const std::uint32_t a = std::max(x.u_exponent(), y.u_exponent());
  const std::uint32_t b = std::max(x.w_exponent(), y.w_exponent());
  return x.numerator().shifted(a - x.u_exponent(), 0, b - x.w_exponent()) ==
         y.numerator().shifted(a - y.u_exponent(), 0, b - y.w_exponent());
}

std::ostream& operator<<(std::ostream& os, const LocalFraction& f) { return os << f.to_string(); }

}  // namespace frobcover
