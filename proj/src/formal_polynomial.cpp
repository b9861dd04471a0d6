#include <sstream>
#include <stdexcept>

#include "frobcover/formal_polynomial.hpp"

namespace frobcover {

const std::array<std::string, 4>& formal_names(FormalSet set) {
  static const std::array<std::string, 4> latin{"a", "b", "c", "d"};
  static const std::array<std::string, 4> greek{"alpha", "beta", "gamma", "delta"};
  return set == FormalSet::Abcd ? latin : greek;
}

bool FormalPolynomial::ExponentOrder::operator()(const Exponents& a, const Exponents& b) const noexcept {
  const auto da = a[0] + a[1] + a[2] + a[3];
  const auto db = b[0] + b[1] + b[2] + b[3];
  if (da != db) return da > db;
  return a > b;
}

FormalPolynomial::FormalPolynomial(CurveContext ctx, FormalSet set) : ctx_(std::move(ctx)), set_(set) {}

FormalPolynomial FormalPolynomial::constant(const LocalFraction& c, FormalSet set) {
  return term(c, set, {0, 0, 0, 0});
}

FormalPolynomial FormalPolynomial::constant(const CurveContext& ctx, FormalSet set, std::int64_t c) {
  return constant(LocalFraction::constant(ctx, c), set);
}

FormalPolynomial FormalPolynomial::variable(const CurveContext& ctx, FormalSet set, int index) {
  if (index < 0 || index > 3) throw std::out_of_range("formal variable index must be in 0..3");
  Exponents e{0, 0, 0, 0};
  e[index] = 1;
  return term(LocalFraction::constant(ctx, 1), set, e);
}

FormalPolynomial FormalPolynomial::term(const LocalFraction& c, FormalSet set, Exponents exps) {
  FormalPolynomial f(c.context(), set);
  f.add_term(exps, c);
  return f;
}

void FormalPolynomial::add_term(const Exponents& e, const LocalFraction& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  LocalFraction sum = it->second + c;
  if (sum.is_zero()) {
    terms_.erase(it);
  } else {
    it->second = std::move(sum);
  }
}

void FormalPolynomial::check_compatible(const FormalPolynomial& o) const {
  if (!(ctx_ == o.ctx_)) throw std::invalid_argument("formal polynomials over different curves");
  if (set_ != o.set_) throw std::invalid_argument("formal polynomials in different indeterminates");
}

LocalFraction FormalPolynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? LocalFraction::constant(ctx_, 0) : it->second;
}

std::set<std::uint32_t> FormalPolynomial::formal_degrees() const {
  std::set<std::uint32_t> out;
  for (const auto& [e, c] : terms_) out.insert(e[0] + e[1] + e[2] + e[3]);
  return out;
}

FormalPolynomial FormalPolynomial::homogeneous_part(std::uint32_t deg) const {
  FormalPolynomial r(ctx_, set_);
  for (const auto& [e, c] : terms_) {
    if (e[0] + e[1] + e[2] + e[3] == deg) r.terms_.emplace(e, c);
  }
  return r;
}

FormalPolynomial FormalPolynomial::operator+(const FormalPolynomial& o) const {
  check_compatible(o);
  FormalPolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

FormalPolynomial FormalPolynomial::operator-(const FormalPolynomial& o) const { return *this + (-o); }

FormalPolynomial FormalPolynomial::operator-() const {
  FormalPolynomial r(ctx_, set_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

FormalPolynomial FormalPolynomial::operator*(const FormalPolynomial& o) const {
  check_compatible(o);
  FormalPolynomial r(ctx_, set_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]}, c1 * c2);
    }
  }
  return r;
}

FormalPolynomial FormalPolynomial::scaled(const LocalFraction& c) const {
  FormalPolynomial r(ctx_, set_);
  for (const auto& [e, coef] : terms_) r.add_term(e, coef * c);
  return r;
}

FormalPolynomial FormalPolynomial::pow(std::uint64_t e) const {
  FormalPolynomial result = constant(ctx_, set_, 1);
  FormalPolynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

FormalPolynomial FormalPolynomial::p_power() const {
  const std::uint32_t p = ctx_.p();
  FormalPolynomial r(ctx_, set_);
  for (const auto& [e, c] : terms_) r.add_term({e[0] * p, e[1] * p, e[2] * p, e[3] * p}, c.p_power());
  return r;
}

FormalPolynomial FormalPolynomial::substitute(const std::array<FormalPolynomial, 4>& images) const {
  const FormalSet target = images[0].variables();
  for (const auto& img : images) {
    if (img.variables() != target || !(img.context() == ctx_)) {
      throw std::invalid_argument("substitution images must share curve and indeterminates");
    }
  }
  FormalPolynomial r(ctx_, target);
  for (const auto& [e, c] : terms_) {
    FormalPolynomial t = constant(c, target);
    for (int i = 0; i < 4; ++i) {
      if (e[i] > 0) t = t * images[i].pow(e[i]);
    }
    r = r + t;
  }
  return r;
}

FormalPolynomial FormalPolynomial::map_coefficients(
    const std::function<LocalFraction(const LocalFraction&)>& f) const {
  std::optional<FormalPolynomial> r;
  for (const auto& [e, c] : terms_) {
    LocalFraction img = f(c);
    if (!r) r.emplace(img.context(), set_);
    r->add_term(e, img);
  }
  return r ? *r : FormalPolynomial(ctx_, set_);
}

ExtFieldElement FormalPolynomial::evaluate(const CurvePoint& point,
                                           const std::array<ExtFieldElement, 4>& values) const {
  ExtFieldElement acc = point[0].field().zero();
  for (const auto& [e, c] : terms_) {
    ExtFieldElement t = c.evaluate(point);
    for (int i = 0; i < 4; ++i) {
      if (e[i] > 0) t *= values[i].pow(e[i]);
    }
    acc += t;
  }
  return acc;
}

std::string FormalPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& names = formal_names(set_);
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool constant_term = e == Exponents{0, 0, 0, 0};
    const bool unit_coef = c == LocalFraction::constant(ctx_, 1);
    if (constant_term || !unit_coef) os << "(" << c.to_string() << ")";
    bool wrote = constant_term || !unit_coef;
    for (int i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

bool FormalPolynomial::operator==(const FormalPolynomial& o) const {
  if (!(ctx_ == o.ctx_) || set_ != o.set_) return false;
  return (*this - o).is_zero();
}

std::ostream& operator<<(std::ostream& os, const FormalPolynomial& f) { return os << f.to_string(); }

FormalMatrix indeterminate_matrix(const CurveContext& ctx, FormalSet set) {
  std::vector<FormalPolynomial> e;
  for (int i = 0; i < 4; ++i) e.push_back(FormalPolynomial::variable(ctx, set, i));
  return FormalMatrix(2, 2, std::move(e));
}

FormalMatrix to_formal(const FractionMatrix& m, FormalSet set) {
  return m.map([set](const LocalFraction& x) { return FormalPolynomial::constant(x, set); });
}

}  // namespace frobcover
