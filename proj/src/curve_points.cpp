#include <random>
#include <set>
#include <stdexcept>

#include "frobcover/curve_algebra.hpp"

namespace frobcover {

namespace {

// roots[i] lists the indices of all x with x^e equal to element i.
std::vector<std::vector<std::uint64_t>> root_table(const ExtensionField& field, std::uint32_t e) {
  std::vector<std::vector<std::uint64_t>> roots(field.order());
  for (std::uint64_t i = 0; i < field.order(); ++i) roots[field.element_at(i).pow(e).index()].push_back(i);
  return roots;
}

void check_characteristic(const ExtensionField& field, const CurveContext& ctx) {
  if (field.characteristic() != ctx.p()) throw std::invalid_argument("field and curve characteristic differ");
}

}  // namespace

std::vector<CurvePoint> enumerate_curve_points(const ExtensionField& field, const CurveContext& ctx,
                                               std::uint64_t cap) {
  check_characteristic(field, ctx);
  field.require_enumerable(cap);
  const std::uint32_t e = ctx.relation_degree();
  const auto roots = root_table(field, e);
  std::vector<ExtFieldElement> powers;
  powers.reserve(field.order());
  for (std::uint64_t i = 0; i < field.order(); ++i) powers.push_back(field.element_at(i).pow(e));

  std::vector<CurvePoint> out;
  for (std::uint64_t a = 0; a < field.order(); ++a) {
    for (std::uint64_t b = 0; b < field.order(); ++b) {
      const auto target = (powers[a] + powers[b]).index();
      for (std::uint64_t c : roots[target]) {
        if (a == 0 && b == 0 && c == 0) continue;
        out.push_back({field.element_at(a), field.element_at(b), field.element_at(c)});
      }
    }
  }
  return out;
}

std::vector<CurvePoint> random_curve_points(const ExtensionField& field, const CurveContext& ctx,
                                            std::size_t count, std::uint64_t seed, PointSampling sampling) {
  check_characteristic(field, ctx);
  field.require_enumerable(kDefaultEnumerationCap);
  const std::uint32_t e = ctx.relation_degree();
  const auto roots = root_table(field, e);
  const std::uint64_t q = field.order();

  // Number of admissible (u, v) pairs with at least one root bounds the point count.
  std::uint64_t available = 0;
  for (std::uint64_t a = 0; a < q; ++a) {
    if (sampling.require_unit_uw && a == 0) continue;
    const auto ua = field.element_at(a).pow(e);
    for (std::uint64_t b = 0; b < q; ++b) {
      const auto& r = roots[(ua + field.element_at(b).pow(e)).index()];
      for (std::uint64_t c : r) {
        if (sampling.require_unit_uw && c == 0) continue;
        if (a == 0 && b == 0 && c == 0) continue;
        ++available;
      }
    }
  }
  if (available < count) {
    throw std::runtime_error("curve has only " + std::to_string(available) + " admissible points, " +
                             std::to_string(count) + " requested");
  }

  std::mt19937_64 rng(seed);
  std::set<std::array<std::uint64_t, 3>> seen;
  std::vector<CurvePoint> out;
  while (out.size() < count) {
    const std::uint64_t a = rng() % q;
    const std::uint64_t b = rng() % q;
    if (sampling.require_unit_uw && a == 0) continue;
    const auto target = (field.element_at(a).pow(e) + field.element_at(b).pow(e)).index();
    const auto& r = roots[target];
    if (r.empty()) continue;
    const std::uint64_t c = r[rng() % r.size()];
    if (sampling.require_unit_uw && c == 0) continue;
    if (a == 0 && b == 0 && c == 0) continue;
    if (!seen.insert({a, b, c}).second) continue;
    out.push_back({field.element_at(a), field.element_at(b), field.element_at(c)});
  }
  return out;
}

}  // namespace frobcover
