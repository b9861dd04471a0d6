#pragma once

// Points of the cover above (u:v:w) = (1:0:1) and the numeric invariants of
// its components.

#include <cstdint>
#include <optional>
#include <vector>

#include "frobcover/check.hpp"
#include "frobcover/cover.hpp"
#include "frobcover/finite_field.hpp"

namespace frobcover {

/// A fiber point; a = c^p and b = d^p are determined by c and d.
struct FiberPoint {
  ExtFieldElement c;
  ExtFieldElement d;

  ExtFieldElement a() const { return c.frobenius(); }
  ExtFieldElement b() const { return d.frobenius(); }
};

/// Smallest even m such that c^{p^2-1} = 2 is solvable in F_{p^m}; then all
/// p^2-1 solutions lie there.
std::uint32_t fiber_field_degree(std::uint32_t p);

/// (p^2-1) p (p-1).
std::uint64_t fiber_size_formula(std::uint32_t p);

struct FiberCensus {
  ExtensionField field;
  /// All c with c^{p^2-1} = 2, in enumeration order.
  std::vector<ExtFieldElement> roots;
  std::vector<FiberPoint> points;
};

/// Scans F_{p^m} for the roots of c^{p^2-1} = 2 and keeps the pairs (c, d)
/// of roots with (c d^p - c^p d)^{p-1} = -2. Returns nothing when p^m exceeds
/// the cap.
std::optional<FiberCensus> enumerate_fiber(std::uint32_t p, std::uint64_t cap = kDefaultEnumerationCap);

/// c^{p^2-1} = 2, d^{p^2-1} = 2 and (c d^p - c^p d)^{p-1} = -2.
bool satisfies_fiber_equations(const FiberPoint& pt);

/// 2c - a^p, 2d - b^p, a - c^p, b - d^p and (ad - bc)^{p-1} + 2 all vanish.
bool satisfies_fiber_generators(const FiberPoint& pt);

/// Every census point re-verified against both equation sets.
CheckResult check_fiber_points(const FiberCensus& census);

/// The chart relations vanish at (1, 0, 1) with (a, b, c, d) from each point.
CheckResult check_relations_at_base_point(const FiberCensus& census, const CoverData& data);

/// d/c ranges over the (p^2-1)-th roots of unity with zeta^{p-1} != 1, each
/// value taken by exactly p^2-1 points.
CheckResult check_fiber_structure(const FiberCensus& census);

/// Minimal k with x^{p-1} = -2 solvable in F_{p^k}, by the power criterion.
std::uint32_t eta_field_degree(std::uint32_t p);

/// Scan-confirms eta_field_degree in every F_{p^k} within the cap.
CheckResult confirm_eta_field_degree(std::uint32_t p, std::uint64_t cap = kDefaultEnumerationCap);

struct ComponentStats {
  std::uint32_t p = 0;
  std::uint64_t component_count = 0;
  std::uint64_t total_fiber = 0;
  std::uint64_t degree_per_component = 0;
  std::uint64_t genus_base = 0;
  std::uint64_t genus_component = 0;
  std::uint32_t eta_field_degree = 0;
  std::uint32_t fiber_field_degree = 0;
  /// Generator of F_p^*.
  std::optional<ExtFieldElement> zeta;
};

/// Formula values; total_fiber comes from the census when one is given.
ComponentStats component_stats(std::uint32_t p, const FiberCensus* census = nullptr);

/// 2 g_X - 2 = deg (2 g_Y - 2).
bool hurwitz_consistent(const ComponentStats& s);

/// p(p^2-1)(p(p-1)/2 - 1) + 1.
std::uint64_t genus_formula(std::uint32_t p);

}  // namespace frobcover
