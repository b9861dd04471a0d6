#include <random>
#include <string>

#include "frobcover/oracle.hpp"

namespace frobcover {

namespace {

using Vec3 = std::array<ExtFieldElement, 3>;
using Values = std::array<ExtFieldElement, 4>;
using NumMatrix = Matrix<ExtFieldElement>;

Vec3 at(const Triple& t, const CurvePoint& pt) { return {t[0].evaluate(pt), t[1].evaluate(pt), t[2].evaluate(pt)}; }

Vec3 at(const SyzygyTriple& t, const CurvePoint& pt) { return at(t.components, pt); }

bool is_zero(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

Vec3 operator*(const ExtFieldElement& s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }

Vec3 operator+(const Vec3& x, const Vec3& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2]}; }

Vec3 operator-(const Vec3& x, const Vec3& y) { return {x[0] - y[0], x[1] - y[1], x[2] - y[2]}; }

Vec3 p_power(const Vec3& v, std::uint32_t p) { return {v[0].pow(p), v[1].pow(p), v[2].pow(p)}; }

ExtFieldElement det2(const NumMatrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

NumMatrix adj2(const NumMatrix& m) { return NumMatrix(2, 2, {m(1, 1), -m(0, 1), -m(1, 0), m(0, 0)}); }

NumMatrix p_power(const NumMatrix& m, std::uint32_t p) {
  return m.map([p](const ExtFieldElement& x) { return x.pow(p); });
}

NumMatrix at(const FractionMatrix& m, const CurvePoint& pt) {
  return m.map([&](const LocalFraction& x) { return x.evaluate(pt); });
}

NumMatrix from_values(const Values& v) { return NumMatrix(2, 2, {v[0], v[1], v[2], v[3]}); }

Values to_values(const NumMatrix& m) { return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)}; }

class Sampler {
 public:
  Sampler(ExtensionField field, std::uint64_t seed) : field_(std::move(field)), rng_(seed) {}

  ExtFieldElement element() { return field_.element_at(rng_() % field_.order()); }

  ExtFieldElement unit() {
    for (;;) {
      ExtFieldElement x = element();
      if (!x.is_zero()) return x;
    }
  }

  Values values() { return {element(), element(), element(), element()}; }

 private:
  ExtensionField field_;
  std::mt19937_64 rng_;
};

// A^(p) adj A - det(A) H, numerically.
NumMatrix relation_value(const NumMatrix& a, const NumMatrix& h, std::uint32_t p) {
  return p_power(a, p) * adj2(a) - h.map([&](const ExtFieldElement& x) { return det2(a) * x; });
}

}  // namespace

CheckResult syzygy_evaluation_oracle(const GeneratorCatalog& cat, const OracleOptions& options) {
  const std::uint32_t p = cat.fermat.p();
  const ExtensionField field = make_extension_field(p, 2);
  const auto base_points = random_curve_points(field, cat.base, options.points, options.seed);
  const auto fermat_points = random_curve_points(field, cat.fermat, options.points, options.seed + 1);
  const PeriodicityMap alpha = periodicity_map(cat);
  CheckLog log;

  for (const auto& e : cat.entries) {
    const bool on_base = e.components[0].context() == cat.base;
    for (const auto& pt : on_base ? base_points : fermat_points) {
      const Vec3 a = at(e.components, pt);
      const Vec3 f = at(e.data, pt);
      log.require((a[0] * f[0] + a[1] * f[1] + a[2] * f[2]).is_zero(), e.name + " at a point");
    }
  }

  for (const auto& pt : base_points) {
    const auto& [x, y, z] = pt;
    for (const char* family : {"phi", "psi"}) {
      const std::string f = family;
      const Vec3 k = z * at(cat.at(f + "(e1)"), pt) - y * at(cat.at(f + "(e2)"), pt) + x * at(cat.at(f + "(e3)"), pt);
      log.require(is_zero(k), f + " kernel relation at a point");
    }
    for (int i = 0; i < 3; ++i) {
      const Vec3 psi = at(cat.at("psi(e" + std::to_string(i + 1) + ")"), pt);
      log.require(is_zero(Vec3{psi[2], -psi[1], psi[0]} - at(alpha.base_images[i], pt)),
                  "coordinate swap of psi(e" + std::to_string(i + 1) + ")");
    }
  }

  for (const auto& pt : fermat_points) {
    const auto& [u, v, w] = pt;
    const ExtFieldElement u2 = u * u, v2 = v * v, w2 = w * w;
    for (const char* suffix : {"", "'"}) {
      const std::string s = suffix;
      const Vec3 r = w2 * at(cat.at("s1" + s), pt) - v2 * at(cat.at("s2" + s), pt) + u2 * at(cat.at("s3" + s), pt);
      log.require(is_zero(r), "w^2 s1" + s + " - v^2 s2" + s + " + u^2 s3" + s + " at a point");
    }
    const CurvePoint squares{u2, v2, w2};
    for (int i = 0; i < 3; ++i) {
      log.require(is_zero(at(alpha.base_sources[i], squares) - at(alpha.sources[i], pt)),
                  alpha.sources[i].name + " from squares");
      log.require(is_zero(at(alpha.base_images[i], squares) - at(alpha.images[i], pt)),
                  alpha.images[i].name + " from squares");
    }
  }
  return log.result("syzygy identities at " + std::to_string(options.points) + " points over F_" +
                    std::to_string(field.order()));
}

CheckResult cover_evaluation_oracle(const GeneratorCatalog& cat, const CoverData& data, const OracleOptions& options) {
  const CurveContext& f = cat.fermat;
  const std::uint32_t p = f.p();
  const ExtensionField field = make_extension_field(p, 2);
  const auto points = random_curve_points(field, f, options.points, options.seed + 2);
  Sampler sampler(field, options.seed + 3);
  const ExtFieldElement two = field.constant(2);
  CheckLog log;

  for (const auto& pt : points) {
    const auto& [u, v, w] = pt;
    const ExtFieldElement ui = u.inverse(), wi = w.inverse();
    const NumMatrix t = at(data.t, pt);
    const NumMatrix hu = at(data.h.on_u, pt);
    const NumMatrix hw = at(data.h.on_w, pt);

    const Vec3 s1 = at(cat.at("s1"), pt), s2 = at(cat.at("s2"), pt), s3 = at(cat.at("s3"), pt);
    log.require(is_zero(wi * s2 - (t(0, 0) * (ui * s1) + t(1, 0) * (ui * s2))), "s2/w in the u-frame");
    log.require(is_zero(wi * s3 - (t(0, 1) * (ui * s1) + t(1, 1) * (ui * s2))), "s3/w in the u-frame");

    const ExtFieldElement uip = ui.pow(p), wip = wi.pow(p);
    const Vec3 s1p = p_power(s1, p), s2p = p_power(s2, p), s3p = p_power(s3, p);
    const Vec3 prime_u[2] = {at(cat.at("s1'"), pt), at(cat.at("s2'"), pt)};
    const Vec3 prime_w[2] = {prime_u[1], at(cat.at("s3'"), pt)};
    for (int j = 0; j < 2; ++j) {
      log.require(is_zero(ui * prime_u[j] - (hu(0, j) * (uip * s1p) + hu(1, j) * (uip * s2p))), "base change on U");
      log.require(is_zero(wi * prime_w[j] - (hw(0, j) * (wip * s2p) + hw(1, j) * (wip * s3p))), "base change on W");
    }

    log.require(det2(t).is_one(), "det T = 1");
    log.require(det2(hu) == -two && det2(hw) == -two, "det H = -2");
    const NumMatrix tp = p_power(t, p);
    log.require(hu == tp * hw * adj2(t), "H_U = T^(p) H_W T^-1");

    const Values bv = sampler.values();
    const NumMatrix b = from_values(bv);
    const NumMatrix a = t * b;
    const Values av = to_values(a);
    for (int k = 0; k < 4; ++k) log.require(data.substitution[k].evaluate(pt, bv) == av[k], "A = T B");

    const ExtFieldElement ue = u.pow(p + 1), we = w.pow(p + 1);
    const Values random_a = sampler.values();
    const NumMatrix mu_random = relation_value(from_values(random_a), hu, p);
    const NumMatrix mw = relation_value(b, hw, p);
    const NumMatrix mu = relation_value(a, hu, p);
    for (int k = 0; k < 4; ++k) {
      log.require(data.relations_u[k].evaluate(pt, random_a) == ue * mu_random.entries()[k], "relation on U");
      log.require(data.relations_w[k].evaluate(pt, bv) == we * mw.entries()[k], "relation on W");
      log.require(data.relations_u[k].evaluate(pt, av) == ue * mu.entries()[k], "relation on U at T B");
    }
    log.require(mu == tp * mw * adj2(t), "M_U(T B) = T^(p) M_W(B) adj T");

    const auto& [al, be, ga, de] = bv;
    const ExtFieldElement first = wi * (u * u * al + v * v * ga);
    const ExtFieldElement second = wi * (u * u * be + v * v * de);
    log.require(first * w * w - w * ga * v * v == w * al * u * u, "w alpha membership");
    log.require(second * w * w - w * de * v * v == w * be * u * u, "w beta membership");
    log.require(w * ga == -(u * av[0]) && w * de == -(u * av[1]), "w gamma, w delta from a, b");
    log.require(first == u * av[2] && second == u * av[3], "membership terms from c, d");

    const NumMatrix ra = from_values(random_a);
    log.require(det2(p_power(ra, p)) == det2(ra).pow(p), "det A^(p) = (det A)^p");
    log.require(det2(hu * ra) == det2(hu) * det2(ra), "det(H A) = det H det A");
  }

  // Points with w = 0: (t, t v0, 0) with v0^{p+1} = -1.
  std::vector<ExtFieldElement> v0s;
  for (std::uint64_t i = 0; i < field.order(); ++i) {
    const ExtFieldElement x = field.element_at(i);
    if (x.pow(p + 1) == field.constant(-1)) v0s.push_back(x);
  }
  log.require(!v0s.empty(), "points with w = 0 exist");
  for (std::size_t n = 0; n < options.points && !v0s.empty(); ++n) {
    const ExtFieldElement s = sampler.unit();
    const CurvePoint pt{s, s * v0s[n % v0s.size()], field.zero()};
    const auto [a, b, c, d] = sampler.values();
    const ExtFieldElement det = a * d - b * c;
    const Values gens{a.pow(p) * d - c * b.pow(p), b.pow(p) * a - a.pow(p) * b - det,
                      c.pow(p) * d - c * d.pow(p) - two * det, d.pow(p) * a - b * c.pow(p)};
    for (int k = 0; k < 4; ++k) {
      log.require(data.relations_u[k].evaluate(pt, {a, b, c, d}) == s.pow(p + 1) * gens[k], "w = 0 specialisation");
    }
  }
  return log.result("cover identities at " + std::to_string(options.points) + " points over F_" +
                    std::to_string(field.order()));
}

}  // namespace frobcover
