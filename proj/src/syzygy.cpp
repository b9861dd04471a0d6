#include <iterator>
#include <stdexcept>

#include "frobcover/syzygy.hpp"

namespace frobcover {

namespace {

CurvePolynomial mono(const CurveContext& ctx, std::int64_t c, std::uint32_t i, std::uint32_t j, std::uint32_t k) {
  return CurvePolynomial::monomial(ctx, c, i, j, k);
}

CurvePolynomial zero(const CurveContext& ctx) { return CurvePolynomial(ctx); }

SyzygyTriple make(std::string name, Triple comps, Triple data, std::int64_t twist, std::int64_t total) {
  return SyzygyTriple{std::move(name), std::move(comps), std::move(data), twist, total};
}

std::string triple_string(const Triple& t) {
  return "(" + t[0].to_string() + ", " + t[1].to_string() + ", " + t[2].to_string() + ")";
}

Triple swap_signs(const Triple& t) { return {t[2], -t[1], t[0]}; }

bool triples_equal(const Triple& a, const Triple& b) { return a[0] == b[0] && a[1] == b[1] && a[2] == b[2]; }

}  // namespace

CheckResult check_syzygy(const SyzygyTriple& t) {
  const CurveContext& ctx = t.data[0].context();
  for (int i = 0; i < 3; ++i) {
    if (!(t.components[i].context() == ctx) || !(t.data[i].context() == ctx)) {
      throw std::invalid_argument(t.name + ": components and data live on different curves");
    }
    if (!t.components[i].is_homogeneous() || !t.data[i].is_homogeneous()) {
      throw std::invalid_argument(t.name + ": non-homogeneous entry");
    }
    if (t.data[i].is_zero()) throw std::invalid_argument(t.name + ": zero form in syzygy data");
  }
  CurvePolynomial sum = t.components[0] * t.data[0] + t.components[1] * t.data[1] + t.components[2] * t.data[2];
  if (!sum.is_zero()) return {false, t.name + ": sum a_i f_i = " + sum.to_string()};
  std::optional<std::int64_t> degree;
  for (int i = 0; i < 3; ++i) {
    if (t.components[i].is_zero()) continue;
    const std::int64_t di = *t.components[i].homogeneous_degree() + *t.data[i].homogeneous_degree();
    if (degree && *degree != di) return {false, t.name + ": deg a_i + deg f_i not constant"};
    degree = di;
  }
  if (!degree) return {false, t.name + ": zero triple"};
  if (*degree - t.twist != t.total_degree) {
    return {false, t.name + ": total degree " + std::to_string(*degree - t.twist) + ", declared " +
                       std::to_string(t.total_degree)};
  }
  return {true, t.name + " of total degree " + std::to_string(t.total_degree)};
}

Triple combine(const std::array<CurvePolynomial, 3>& c, const std::array<Triple, 3>& t) {
  auto entry = [&](int k) { return c[0] * t[0][k] + c[1] * t[1][k] + c[2] * t[2][k]; };
  return {entry(0), entry(1), entry(2)};
}

bool is_zero_triple(const Triple& t) { return t[0].is_zero() && t[1].is_zero() && t[2].is_zero(); }

SyzygyTriple flip_term_sign(const SyzygyTriple& t, int component, std::size_t term) {
  const CurvePolynomial& f = t.components.at(component);
  if (term >= f.size()) throw std::out_of_range(t.name + " has no term " + std::to_string(term));
  const auto& [m, c] = *std::next(f.terms().begin(), static_cast<std::ptrdiff_t>(term));
  SyzygyTriple out = t;
  out.components[component] = f - mono(f.context(), 2 * static_cast<std::int64_t>(c), m[0], m[1], m[2]);
  return out;
}

const SyzygyTriple& GeneratorCatalog::at(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("no catalog entry " + name);
}

SyzygyTriple& GeneratorCatalog::at(const std::string& name) {
  return const_cast<SyzygyTriple&>(static_cast<const GeneratorCatalog&>(*this).at(name));
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"R0",      "R1",      "R2",      "R3",      "phi(e1)", "phi(e2)",
                                              "phi(e3)", "psi(e1)", "psi(e2)", "psi(e3)", "kernel",  "s1",
                                              "s2",      "s3",      "s1'",     "s2'",     "s3'"};
  return names;
}

Triple phi_map(const CurveContext& base, const Triple& f, const Triple& g) {
  const std::uint32_t d = base.d();
  const CurvePolynomial zd1 = mono(base, 1, 0, 0, d - 1);
  const CurvePolynomial z = mono(base, 1, 0, 0, 1);
  return {zd1 * f[0] + g[0], zd1 * f[1] + g[1], f[2] + z * g[2]};
}

std::array<SyzygyTriple, 3> printed_koszul_map(const CurveContext& b) {
  const Triple data{mono(b, 1, 0, 0, 1), mono(b, -1, 0, 1, 0), mono(b, 1, 1, 0, 0)};
  return {make("psi(e1)", {mono(b, 1, 1, 0, 0), zero(b), mono(b, -1, 0, 0, 1)}, data, 2, 0),
          make("psi(e2)", {mono(b, 1, 0, 1, 0), mono(b, 1, 0, 0, 1), zero(b)}, data, 2, 0),
          make("psi(e3)", {zero(b), mono(b, 1, 1, 0, 0), mono(b, 1, 0, 1, 0)}, data, 2, 0)};
}

GeneratorCatalog build_catalog(std::uint32_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  GeneratorCatalog cat{CurveContext::base_curve(p), CurveContext::fermat(p), {}};
  const CurveContext& b = cat.base;
  const CurveContext& f = cat.fermat;
  const std::uint32_t d = b.d();
  const auto P = static_cast<std::int64_t>(p);

  const CurvePolynomial xd = mono(b, 1, d, 0, 0);
  const CurvePolynomial yd = mono(b, 1, 0, d, 0);
  const Triple s1_data{mono(b, 1, p, 0, 0), mono(b, 1, 0, p, 0), xd + yd};
  const Triple s2_data{mono(b, 1, p, 0, 0), mono(b, 1, 0, p, 0), (xd + yd).pow(2)};

  auto& e = cat.entries;
  e.push_back(make("R0", {mono(b, 1, 0, d - 1, 0), mono(b, 1, d - 1, 0, 0), mono(b, -1, d - 1, d - 1, 0)}, s1_data,
                   0, (3 * P - 1) / 2));
  e.push_back(make("R1", {mono(b, -1, 1, 0, 0), mono(b, 1, 0, 1, 0), xd - yd}, s1_data, 0, P + 1));
  e.push_back(make("R2", {mono(b, 1, 1, d - 1, 0), xd.scaled(2) + yd, mono(b, -1, 0, d - 1, 0)}, s2_data, 0,
                   (3 * P + 1) / 2));
  e.push_back(make("R3", {xd + yd.scaled(2), mono(b, 1, d - 1, 1, 0), mono(b, -1, d - 1, 0, 0)}, s2_data, 0,
                   (3 * P + 1) / 2));

  const Triple frob_data{mono(b, 1, p, 0, 0), mono(b, 1, 0, p, 0), mono(b, 1, 0, 0, p)};
  const std::int64_t phi_twist = (3 * P + 1) / 2;
  e.push_back(make("phi(e1)", {mono(b, -1, 1, 0, d - 1), mono(b, 1, 0, 1, d - 1), xd - yd}, frob_data, phi_twist, 0));
  e.push_back(make("phi(e2)", {mono(b, 1, 1, d - 1, 0), xd.scaled(2) + yd, mono(b, -1, 0, d - 1, 1)}, frob_data,
                   phi_twist, 0));
  e.push_back(make("phi(e3)", {xd + yd.scaled(2), mono(b, 1, d - 1, 1, 0), mono(b, -1, d - 1, 0, 1)}, frob_data,
                   phi_twist, 0));

  // Koszul map relabelled so that (z, -y, x) generates its kernel.
  const auto printed = printed_koszul_map(b);
  e.push_back(make("psi(e1)",
                   {-printed[2].components[0], -printed[2].components[1], -printed[2].components[2]},
                   printed[2].data, 2, 0));
  e.push_back(make("psi(e2)", printed[0].components, printed[0].data, 2, 0));
  e.push_back(make("psi(e3)", printed[1].components, printed[1].data, 2, 0));

  e.push_back(make("kernel", {mono(b, 1, 0, 0, 1), mono(b, -1, 0, 1, 0), mono(b, 1, 1, 0, 0)},
                   {e[4].components[0], e[5].components[0], e[6].components[0]}, d, 1));

  const Triple sq_data{mono(f, 1, 2, 0, 0), mono(f, 1, 0, 2, 0), mono(f, 1, 0, 0, 2)};
  e.push_back(make("s1", {mono(f, -1, 0, 2, 0), mono(f, 1, 2, 0, 0), zero(f)}, sq_data, 3, 1));
  e.push_back(make("s2", {mono(f, -1, 0, 0, 2), zero(f), mono(f, 1, 2, 0, 0)}, sq_data, 3, 1));
  e.push_back(make("s3", {zero(f), mono(f, -1, 0, 0, 2), mono(f, 1, 0, 2, 0)}, sq_data, 3, 1));

  const std::uint32_t dd = 2 * d;
  const CurvePolynomial u2d = mono(f, 1, dd, 0, 0);
  const CurvePolynomial v2d = mono(f, 1, 0, dd, 0);
  const Triple frob_sq{mono(f, 1, 2 * p, 0, 0), mono(f, 1, 0, 2 * p, 0), mono(f, 1, 0, 0, 2 * p)};
  e.push_back(make("s1'", {mono(f, -1, 2, 0, dd - 2), mono(f, 1, 0, 2, dd - 2), u2d - v2d}, frob_sq, 3 * P, 1));
  e.push_back(make("s2'", {mono(f, 1, 2, dd - 2, 0), u2d.scaled(2) + v2d, mono(f, -1, 0, dd - 2, 2)}, frob_sq, 3 * P,
                   1));
  e.push_back(make("s3'", {u2d + v2d.scaled(2), mono(f, 1, dd - 2, 2, 0), mono(f, -1, dd - 2, 0, 2)}, frob_sq, 3 * P,
                   1));
  return cat;
}

CheckResult check_catalog(const GeneratorCatalog& cat) {
  CheckLog log;
  for (const auto& name : catalog_names()) {
    const SyzygyTriple& t = cat.at(name);
    log.require(check_syzygy(t), name);
  }
  const auto zero_b = Triple{zero(cat.base), zero(cat.base), zero(cat.base)};
  log.require(triples_equal(cat.at("phi(e1)").components, phi_map(cat.base, cat.at("R1").components, zero_b)),
              "phi(e1) = phi(R1, 0)");
  log.require(triples_equal(cat.at("phi(e2)").components, phi_map(cat.base, zero_b, cat.at("R2").components)),
              "phi(e2) = phi(0, R2)");
  log.require(triples_equal(cat.at("phi(e3)").components, phi_map(cat.base, zero_b, cat.at("R3").components)),
              "phi(e3) = phi(0, R3)");
  // The relation among s1, s2, s3.
  const CurveContext& f = cat.fermat;
  const Triple rel = combine({mono(f, 1, 0, 0, 2), mono(f, -1, 0, 2, 0), mono(f, 1, 2, 0, 0)},
                             {cat.at("s1").components, cat.at("s2").components, cat.at("s3").components});
  log.require(is_zero_triple(rel), "w^2 s1 - v^2 s2 + u^2 s3 = " + triple_string(rel));
  return log.result(std::to_string(catalog_names().size()) + " generators verified");
}

CheckResult check_kernel_relation(const GeneratorCatalog& cat) {
  const CurveContext& b = cat.base;
  const std::array<CurvePolynomial, 3> k{mono(b, 1, 0, 0, 1), mono(b, -1, 0, 1, 0), mono(b, 1, 1, 0, 0)};
  CheckLog log;
  for (const char* map : {"phi", "psi"}) {
    const std::string m(map);
    const Triple r = combine(k, {cat.at(m + "(e1)").components, cat.at(m + "(e2)").components,
                                 cat.at(m + "(e3)").components});
    log.require(is_zero_triple(r), "z " + m + "(e1) - y " + m + "(e2) + x " + m + "(e3) = " + triple_string(r));
  }
  const auto& kernel = cat.at("kernel").components;
  for (int i = 0; i < 3; ++i) log.require(kernel[i] == k[i], "kernel entry is (z, -y, x)");
  return log.result("(z, -y, x) annihilates phi and psi");
}

PeriodicityMap periodicity_map(const GeneratorCatalog& cat) {
  const CurveContext& b = cat.base;
  const Triple lin{mono(b, 1, 1, 0, 0), mono(b, 1, 0, 1, 0), mono(b, 1, 0, 0, 1)};
  PeriodicityMap m{
      {cat.at("phi(e1)"), cat.at("phi(e2)"), cat.at("phi(e3)")},
      {make("alpha(phi(e1))", {mono(b, -1, 0, 1, 0), mono(b, 1, 1, 0, 0), zero(b)}, lin, 2, 0),
       make("alpha(phi(e2))", {mono(b, -1, 0, 0, 1), zero(b), mono(b, 1, 1, 0, 0)}, lin, 2, 0),
       make("alpha(phi(e3))", {zero(b), mono(b, -1, 0, 0, 1), mono(b, 1, 0, 1, 0)}, lin, 2, 0)},
      {cat.at("s1'"), cat.at("s2'"), cat.at("s3'")},
      {cat.at("s1"), cat.at("s2"), cat.at("s3")}};
  return m;
}

CheckResult check_alpha(const GeneratorCatalog& cat, const PeriodicityMap& alpha) {
  CheckLog log;
  for (int i = 0; i < 3; ++i) {
    log.require(check_syzygy(alpha.images[i]), "step (i) " + alpha.images[i].name);
    log.require(alpha.images[i].total_degree == 1, "step (i) total degree of " + alpha.images[i].name);
    log.require(check_syzygy(alpha.base_images[i]), "step (i) " + alpha.base_images[i].name);
    log.require(check_syzygy(alpha.sources[i]), "step (ii) " + alpha.sources[i].name);
    log.require(alpha.sources[i].total_degree == 1, "step (ii) total degree of " + alpha.sources[i].name);
    log.require(check_syzygy(alpha.base_sources[i]), "step (ii) " + alpha.base_sources[i].name);
  }

  const CurveContext& f = cat.fermat;
  const std::array<CurvePolynomial, 3> rel{mono(f, 1, 0, 0, 2), mono(f, -1, 0, 2, 0), mono(f, 1, 2, 0, 0)};
  const Triple src = combine(rel, {alpha.sources[0].components, alpha.sources[1].components,
                                   alpha.sources[2].components});
  const Triple img = combine(rel, {alpha.images[0].components, alpha.images[1].components,
                                   alpha.images[2].components});
  log.require(is_zero_triple(src), "step (iii) w^2 s1' - v^2 s2' + u^2 s3' = " + triple_string(src));
  log.require(is_zero_triple(img), "step (iii) relation among images = " + triple_string(img));

  const CurveContext& b = cat.base;
  const std::array<CurvePolynomial, 3> krel{mono(b, 1, 0, 0, 1), mono(b, -1, 0, 1, 0), mono(b, 1, 1, 0, 0)};
  const Triple bsrc = combine(krel, {alpha.base_sources[0].components, alpha.base_sources[1].components,
                                     alpha.base_sources[2].components});
  const Triple bimg = combine(krel, {alpha.base_images[0].components, alpha.base_images[1].components,
                                     alpha.base_images[2].components});
  log.require(is_zero_triple(bsrc), "step (iii) kernel relation among phi(e_i)");
  log.require(is_zero_triple(bimg), "step (iii) kernel relation among base images = " + triple_string(bimg));

  const Triple lin{mono(b, 1, 1, 0, 0), mono(b, 1, 0, 1, 0), mono(b, 1, 0, 0, 1)};
  for (int i = 0; i < 3; ++i) {
    const std::string psi = "psi(e" + std::to_string(i + 1) + ")";
    const Triple swapped = swap_signs(cat.at(psi).components);
    log.require(check_syzygy(make("swap " + psi, swapped, lin, 2, 0)), "step (iv) swap of " + psi);
    log.require(triples_equal(swapped, alpha.base_images[i].components),
                "step (iv) swap of " + psi + " = " + triple_string(swapped) + " vs image " +
                    triple_string(alpha.base_images[i].components));
  }
  return log.result("alpha well defined");
}

CheckResult check_alpha(const GeneratorCatalog& cat) { return check_alpha(cat, periodicity_map(cat)); }

CurvePolynomial substitute_squares(const CurvePolynomial& f, const CurveContext& fermat) {
  const CurveContext& b = f.context();
  if (b.p() != fermat.p() || 2 * b.relation_degree() != fermat.relation_degree()) {
    throw std::invalid_argument("square substitution needs a curve of twice the degree");
  }
  std::vector<std::pair<Monomial, std::int64_t>> raw;
  raw.reserve(f.size());
  for (const auto& [m, c] : f.terms()) raw.push_back({{2 * m[0], 2 * m[1], 2 * m[2]}, c});
  return CurvePolynomial::normal_form(fermat, raw);
}

CheckResult check_alpha_substitution(const GeneratorCatalog& cat, const PeriodicityMap& alpha) {
  CheckLog log;
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      log.require(substitute_squares(alpha.base_sources[i].components[k], cat.fermat) ==
                      alpha.sources[i].components[k],
                  alpha.base_sources[i].name + " -> " + alpha.sources[i].name);
      log.require(substitute_squares(alpha.base_images[i].components[k], cat.fermat) ==
                      alpha.images[i].components[k],
                  alpha.base_images[i].name + " -> " + alpha.images[i].name);
    }
  }
  return log.result("square substitution carries the base map to the Fermat map");
}

bool rows_independent(const Triple& r, const Triple& s) {
  return !(r[0] * s[1] - r[1] * s[0]).is_zero() || !(r[0] * s[2] - r[2] * s[0]).is_zero() ||
         !(r[1] * s[2] - r[2] * s[1]).is_zero();
}

CheckResult check_independence(const GeneratorCatalog& cat) {
  CheckLog log;
  log.require(rows_independent(cat.at("R0").components, cat.at("R1").components), "R0, R1 independent");
  log.require(rows_independent(cat.at("R2").components, cat.at("R3").components), "R2, R3 independent");
  return log.result("nonzero 2x2 minors");
}

}  // namespace frobcover
