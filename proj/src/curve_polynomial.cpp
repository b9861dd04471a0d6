#include <functional>
#include <sstream>
#include <stdexcept>

#include "frobcover/curve_algebra.hpp"

namespace frobcover {

namespace {

std::uint32_t reduce_signed(std::int64_t c, std::uint32_t p) {
  std::int64_t r = c % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

// Row q of Pascal's triangle modulo p.
std::vector<std::uint32_t> binomial_row(std::uint32_t q, std::uint32_t p) {
  std::vector<std::uint32_t> row{1};
  for (std::uint32_t n = 1; n <= q; ++n) {
    std::vector<std::uint32_t> next(n + 1, 1);
    for (std::uint32_t k = 1; k < n; ++k) next[k] = (row[k - 1] + row[k]) % p;
    row = std::move(next);
  }
  return row;
}

}  // namespace

CurveContext::CurveContext(std::uint32_t p, std::uint32_t relation_degree, std::array<std::string, 3> names)
    : p_(p), e_(relation_degree), names_(std::move(names)) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("characteristic must be an odd prime");
  if (relation_degree < 1) throw std::invalid_argument("relation degree must be positive");
}

CurveContext CurveContext::fermat(std::uint32_t p) { return CurveContext(p, p + 1, {"u", "v", "w"}); }

CurveContext CurveContext::base_curve(std::uint32_t p) { return CurveContext(p, (p + 1) / 2, {"x", "y", "z"}); }

// ---------------------------------------------------------------------------

CurvePolynomial::CurvePolynomial(CurveContext ctx) : ctx_(std::move(ctx)) {}

CurvePolynomial CurvePolynomial::constant(const CurveContext& ctx, std::int64_t c) {
  return monomial(ctx, c, 0, 0, 0);
}

CurvePolynomial CurvePolynomial::monomial(const CurveContext& ctx, std::int64_t coef, std::uint32_t i,
                                          std::uint32_t j, std::uint32_t k) {
  CurvePolynomial f(ctx);
  f.add_term({i, j, k}, reduce_signed(coef, ctx.p()));
  return f;
}

CurvePolynomial CurvePolynomial::variable(const CurveContext& ctx, int index) {
  if (index < 0 || index > 2) throw std::out_of_range("variable index must be 0, 1 or 2");
  Monomial m{0, 0, 0};
  m[index] = 1;
  return monomial(ctx, 1, m[0], m[1], m[2]);
}

CurvePolynomial CurvePolynomial::normal_form(const CurveContext& ctx,
                                             std::span<const std::pair<Monomial, std::int64_t>> raw) {
  CurvePolynomial f(ctx);
  for (const auto& [m, c] : raw) f.add_term(m, reduce_signed(c, ctx.p()));
  return f;
}

void CurvePolynomial::add_term(const Monomial& m, std::uint64_t coef) {
  const std::uint32_t p = ctx_.p();
  coef %= p;
  if (coef == 0) return;
  const std::uint32_t e = ctx_.relation_degree();
  if (m[2] < e) {
    auto [it, inserted] = terms_.try_emplace(m, static_cast<std::uint32_t>(coef));
    if (!inserted) {
      it->second = static_cast<std::uint32_t>((it->second + coef) % p);
      if (it->second == 0) terms_.erase(it);
    }
    return;
  }
  // w^k = w^r (u^e + v^e)^q with k = q e + r.
  const std::uint32_t q = m[2] / e;
  const std::uint32_t r = m[2] % e;
  const auto row = binomial_row(q, p);
  for (std::uint32_t t = 0; t <= q; ++t) {
    if (row[t] == 0) continue;
    add_term({m[0] + e * t, m[1] + e * (q - t), r}, coef * row[t]);
  }
}

void CurvePolynomial::check_context(const CurvePolynomial& o) const {
  if (!(ctx_ == o.ctx_)) throw std::invalid_argument("polynomials live on different curves");
}

std::optional<std::uint32_t> CurvePolynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const auto& first = terms_.begin()->first;
  const std::uint32_t deg = first[0] + first[1] + first[2];
  for (const auto& [m, c] : terms_) {
    if (m[0] + m[1] + m[2] != deg) return std::nullopt;
  }
  return deg;
}

std::uint32_t CurvePolynomial::min_exponent(int var) const {
  if (terms_.empty()) return 0;
  std::uint32_t best = UINT32_MAX;
  for (const auto& [m, c] : terms_) best = std::min(best, m[var]);
  return best;
}

CurvePolynomial& CurvePolynomial::operator+=(const CurvePolynomial& o) {
  check_context(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CurvePolynomial& CurvePolynomial::operator-=(const CurvePolynomial& o) {
  check_context(o);
  for (const auto& [m, c] : o.terms_) add_term(m, ctx_.p() - c);
  return *this;
}

CurvePolynomial CurvePolynomial::operator+(const CurvePolynomial& o) const {
  CurvePolynomial r = *this;
  r += o;
  return r;
}

CurvePolynomial CurvePolynomial::operator-(const CurvePolynomial& o) const {
  CurvePolynomial r = *this;
  r -= o;
  return r;
}

CurvePolynomial CurvePolynomial::operator-() const { return scaled(-1); }

CurvePolynomial CurvePolynomial::operator*(const CurvePolynomial& o) const {
  check_context(o);
  CurvePolynomial r(ctx_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      r.add_term({m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]}, std::uint64_t{c1} * c2);
    }
  }
  return r;
}

CurvePolynomial CurvePolynomial::scaled(std::int64_t c) const {
  const std::uint64_t s = reduce_signed(c, ctx_.p());
  CurvePolynomial r(ctx_);
  if (s == 0) return r;
  for (const auto& [m, coef] : terms_) r.terms_.emplace(m, static_cast<std::uint32_t>(coef * s % ctx_.p()));
  return r;
}

CurvePolynomial CurvePolynomial::pow(std::uint64_t e) const {
  CurvePolynomial result = constant(ctx_, 1);
  CurvePolynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

CurvePolynomial CurvePolynomial::p_power() const {
  const std::uint32_t p = ctx_.p();
  CurvePolynomial r(ctx_);
  for (const auto& [m, c] : terms_) r.add_term({m[0] * p, m[1] * p, m[2] * p}, c);
  return r;
}

CurvePolynomial CurvePolynomial::shifted(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
  CurvePolynomial r(ctx_);
  for (const auto& [m, c] : terms_) r.add_term({m[0] + i, m[1] + j, m[2] + k}, c);
  return r;
}

CurvePolynomial CurvePolynomial::divide_monomial(std::uint32_t i, std::uint32_t k) const {
  CurvePolynomial r(ctx_);
  for (const auto& [m, c] : terms_) {
    if (m[0] < i || m[2] < k) throw std::domain_error("monomial does not divide polynomial termwise");
    r.terms_.emplace(Monomial{m[0] - i, m[1], m[2] - k}, c);
  }
  return r;
}

std::optional<CurvePolynomial> CurvePolynomial::divide_by_third() const {
  // With f = sum_k f_k w^k and g = sum_k g_k w^k, g w = f forces g_{k-1} = f_k
  // for k >= 1 and f_0 = g_{e-1} (u^e + v^e).
  const std::uint32_t e = ctx_.relation_degree();
  const std::uint32_t p = ctx_.p();
  CurvePolynomial g(ctx_);
  // f_0 as (v exponent, u exponent) -> coefficient, largest v first.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t, std::greater<>> rest;
  for (const auto& [m, c] : terms_) {
    if (m[2] > 0) {
      g.terms_.emplace(Monomial{m[0], m[1], m[2] - 1}, c);
    } else {
      rest[{m[1], m[0]}] = c;
    }
  }
  while (!rest.empty()) {
    const auto [key, c] = *rest.begin();
    const auto [j, i] = key;
    if (j < e) return std::nullopt;
    rest.erase(rest.begin());
    g.add_term({i, j - e, e - 1}, c);
    auto& slot = rest[{j - e, i + e}];
    slot = (slot + p - c) % p;
    if (slot == 0) rest.erase({j - e, i + e});
  }
  return g;
}

bool on_curve(const CurveContext& ctx, const CurvePoint& point) {
  const std::uint32_t e = ctx.relation_degree();
  return point[0].pow(e) + point[1].pow(e) == point[2].pow(e);
}

ExtFieldElement CurvePolynomial::evaluate(const CurvePoint& point) const {
  if (point[0].field().characteristic() != ctx_.p()) {
    throw std::invalid_argument("point has the wrong characteristic");
  }
  if (!on_curve(ctx_, point)) throw std::invalid_argument("point is not on the curve");
  const ExtensionField field = point[0].field();
  ExtFieldElement acc = field.zero();
  for (const auto& [m, c] : terms_) {
    ExtFieldElement t = field.constant(c);
    for (int v = 0; v < 3; ++v) {
      if (m[v] > 0) t *= point[v].pow(m[v]);
    }
    acc += t;
  }
  return acc;
}

std::string CurvePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  const std::uint32_t p = ctx_.p();
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c > p / 2;
    const std::uint32_t mag = negative ? p - c : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool constant_term = m[0] == 0 && m[1] == 0 && m[2] == 0;
    bool wrote = false;
    if (mag != 1 || constant_term) {
      os << mag;
      wrote = true;
    }
    for (int v = 0; v < 3; ++v) {
      if (m[v] == 0) continue;
      if (wrote) os << "*";
      os << ctx_.names()[v];
      if (m[v] > 1) os << "^" << m[v];
      wrote = true;
    }
  }
  return os.str();
}

bool CurvePolynomial::operator==(const CurvePolynomial& o) const {
  return ctx_ == o.ctx_ && terms_ == o.terms_;
}

std::ostream& operator<<(std::ostream& os, const CurvePolynomial& f) { return os << f.to_string(); }

}  // namespace frobcover
