#include <map>
#include <stdexcept>
#include <string>

#include "frobcover/fiber.hpp"

namespace frobcover {

namespace {

void require_odd_prime(std::uint32_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
}

bool order_within(std::uint32_t p, std::uint32_t m, std::uint64_t cap) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    if (q > cap / p) return false;
    q *= p;
  }
  return q <= cap;
}

// (p^n - 1) / (p^s - 1) modulo p - 1, for s | n.
std::uint64_t geometric_sum_mod(std::uint32_t p, std::uint32_t n, std::uint32_t s) {
  const std::uint64_t mod = p - 1;
  if (mod == 1) return 0;
  std::uint64_t sum = 0;
  std::uint64_t term = 1;
  const std::uint64_t step = mod_pow(p, s, static_cast<std::uint32_t>(mod));
  for (std::uint32_t i = 0; i < n / s; ++i) {
    sum = (sum + term) % mod;
    term = term * step % mod;
  }
  return sum;
}

}  // namespace

std::uint32_t fiber_field_degree(std::uint32_t p) {
  require_odd_prime(p);
  // 2 lies in F_p, so 2^N can be computed with N reduced modulo p - 1.
  for (std::uint32_t m = 2; m <= 2 * p; m += 2) {
    const std::uint64_t n = geometric_sum_mod(p, m, 2);
    if (mod_pow(2, n, p) == 1) return m;
  }
  throw std::logic_error("no fiber field degree found");
}

std::uint64_t fiber_size_formula(std::uint32_t p) {
  const std::uint64_t q = p;
  return (q * q - 1) * q * (q - 1);
}

std::optional<FiberCensus> enumerate_fiber(std::uint32_t p, std::uint64_t cap) {
  const std::uint32_t m = fiber_field_degree(p);
  if (!order_within(p, m, cap)) return std::nullopt;
  ExtensionField field = make_extension_field(p, m);
  const std::uint64_t n = std::uint64_t{p} * p - 1;
  FiberCensus census{field, solve_power_equation(field, n, field.constant(2), cap), {}};
  const ExtFieldElement minus_two = field.constant(-2);
  for (const auto& c : census.roots) {
    for (const auto& d : census.roots) {
      const ExtFieldElement x = c * d.frobenius() - c.frobenius() * d;
      if (x.pow(p - 1) == minus_two) census.points.push_back({c, d});
    }
  }
  return census;
}

bool satisfies_fiber_equations(const FiberPoint& pt) {
  const ExtensionField f = pt.c.field();
  const std::uint32_t p = f.characteristic();
  const std::uint64_t n = std::uint64_t{p} * p - 1;
  const ExtFieldElement two = f.constant(2);
  const ExtFieldElement x = pt.c * pt.d.frobenius() - pt.c.frobenius() * pt.d;
  return pt.c.pow(n) == two && pt.d.pow(n) == two && x.pow(p - 1) == f.constant(-2);
}

bool satisfies_fiber_generators(const FiberPoint& pt) {
  const ExtensionField f = pt.c.field();
  const std::uint32_t p = f.characteristic();
  const ExtFieldElement a = pt.a();
  const ExtFieldElement b = pt.b();
  const ExtFieldElement two = f.constant(2);
  const ExtFieldElement det = a * pt.d - b * pt.c;
  return (two * pt.c - a.pow(p)).is_zero() && (two * pt.d - b.pow(p)).is_zero() &&
         (a - pt.c.pow(p)).is_zero() && (b - pt.d.pow(p)).is_zero() && (det.pow(p - 1) + two).is_zero();
}

CheckResult check_fiber_points(const FiberCensus& census) {
  CheckLog log;
  for (const auto& pt : census.points) {
    const std::string where = "(c, d) = (" + pt.c.to_string() + ", " + pt.d.to_string() + ")";
    log.require(satisfies_fiber_equations(pt), where + " fiber equations");
    log.require(!pt.c.is_zero() && !pt.d.is_zero(), where + " units");
    log.require(satisfies_fiber_generators(pt), where + " original generators");
  }
  return log.result(std::to_string(census.points.size()) + " points re-verified");
}

CheckResult check_relations_at_base_point(const FiberCensus& census, const CoverData& data) {
  const ExtensionField& f = census.field;
  const CurvePoint base{f.one(), f.zero(), f.one()};
  CheckLog log;
  for (const auto& pt : census.points) {
    const std::array<ExtFieldElement, 4> values{pt.a(), pt.b(), pt.c, pt.d};
    for (int k = 0; k < 4; ++k) {
      log.require(data.relations_u[k].evaluate(base, values).is_zero(),
                  "relation " + std::to_string(k + 1) + " at (c, d) = (" + pt.c.to_string() + ", " +
                      pt.d.to_string() + ")");
    }
  }
  return log.result("chart relations vanish on the fiber");
}

CheckResult check_fiber_structure(const FiberCensus& census) {
  const ExtensionField& f = census.field;
  const std::uint32_t p = f.characteristic();
  const std::uint64_t n = std::uint64_t{p} * p - 1;
  std::map<std::uint64_t, std::uint64_t> classes;
  CheckLog log;
  for (const auto& pt : census.points) {
    const ExtFieldElement zeta = pt.d * pt.c.inverse();
    log.require(zeta.pow(n).is_one(), "d/c is a root of unity");
    log.require(!zeta.pow(p - 1).is_one(), "zeta^(p-1) != 1");
    ++classes[zeta.index()];
  }
  log.require(census.roots.size() == n, "root count " + std::to_string(census.roots.size()));
  log.require(classes.size() == n - (p - 1), std::to_string(classes.size()) + " values of d/c");
  for (const auto& [zeta, count] : classes) log.require(count == n, "class size " + std::to_string(count));
  return log.result("fiber parametrised by c and zeta = d/c");
}

std::uint32_t eta_field_degree(std::uint32_t p) {
  require_odd_prime(p);
  const std::uint32_t minus_two = p - 2;
  // gcd(p-1, p^k-1) = p-1, so the exponent is (p^k-1)/(p-1).
  for (std::uint32_t k = 1; k <= p; ++k) {
    if (mod_pow(minus_two, geometric_sum_mod(p, k, 1), p) == 1) return k;
  }
  throw std::logic_error("no eta field degree found");
}

CheckResult confirm_eta_field_degree(std::uint32_t p, std::uint64_t cap) {
  const std::uint32_t k = eta_field_degree(p);
  CheckLog log;
  std::uint32_t scanned = 0;
  for (std::uint32_t j = 1; j <= k && order_within(p, j, cap); ++j) {
    const ExtensionField f = make_extension_field(p, j);
    const auto roots = solve_power_equation(f, p - 1, f.constant(-2), cap);
    log.require(power_equation_solvable(f.constant(-2), p - 1) == !roots.empty(),
                "criterion agrees with scan in degree " + std::to_string(j));
    if (j < k) {
      log.require(roots.empty(), "no root in degree " + std::to_string(j));
    } else {
      log.require(roots.size() == p - 1, std::to_string(roots.size()) + " roots in degree " + std::to_string(j));
    }
    scanned = j;
  }
  const std::string how = scanned == k ? "scan-confirmed" : "criterion, scanned up to degree " + std::to_string(scanned);
  return log.result("eta field degree " + std::to_string(k) + " (" + how + ")");
}

std::uint64_t genus_formula(std::uint32_t p) {
  const std::uint64_t q = p;
  return q * (q * q - 1) * (q * (q - 1) / 2 - 1) + 1;
}

ComponentStats component_stats(std::uint32_t p, const FiberCensus* census) {
  require_odd_prime(p);
  ComponentStats s;
  const std::uint64_t q = p;
  s.p = p;
  s.component_count = q - 1;
  s.total_fiber = census ? census->points.size() : fiber_size_formula(p);
  s.degree_per_component = q * (q * q - 1);
  s.genus_base = q * (q - 1) / 2;
  s.genus_component = genus_formula(p);
  s.eta_field_degree = eta_field_degree(p);
  s.fiber_field_degree = fiber_field_degree(p);
  s.zeta = find_generator(make_extension_field(p, 1));
  return s;
}

bool hurwitz_consistent(const ComponentStats& s) {
  const auto gx = static_cast<std::int64_t>(s.genus_component);
  const auto gy = static_cast<std::int64_t>(s.genus_base);
  return 2 * gx - 2 == static_cast<std::int64_t>(s.degree_per_component) * (2 * gy - 2);
}

}  // namespace frobcover
