#include <stdexcept>

#include "frobcover/cover.hpp"

namespace frobcover {

namespace {

LocalFraction frac(const CurveContext& ctx, std::int64_t c, std::uint32_t i, std::uint32_t j, std::uint32_t k,
                   std::uint32_t a = 0, std::uint32_t b = 0) {
  return LocalFraction::monomial(ctx, c, {i, j, k}, a, b);
}

FormalPolynomial var(const CurveContext& ctx, FormalSet set, int i) { return FormalPolynomial::variable(ctx, set, i); }

const char* entry_name(int k) {
  static const char* names[] = {"(1,1)", "(1,2)", "(2,1)", "(2,2)"};
  return names[k];
}

}  // namespace

FractionMatrix transition_matrix(const CurveContext& f) {
  return FractionMatrix(2, 2,
                        {LocalFraction::constant(f, 0), frac(f, -1, 0, 0, 1, 1, 0), frac(f, 1, 1, 0, 0, 0, 1),
                         frac(f, 1, 0, 2, 0, 1, 1)});
}

HMatrices h_matrices(const CurveContext& f) {
  const std::uint32_t p = f.p();
  const std::uint32_t e = p + 1;
  const CurvePolynomial ue = CurvePolynomial::monomial(f, 1, e, 0, 0);
  const CurvePolynomial ve = CurvePolynomial::monomial(f, 1, 0, e, 0);
  FractionMatrix hu(2, 2,
                    {frac(f, 1, 0, 2, p - 1, e, 0), LocalFraction(ue.scaled(2) + ve, e, 0), LocalFraction(ue - ve, e, 0),
                     frac(f, -1, 0, p - 1, 2, e, 0)});
  FractionMatrix hw(2, 2,
                    {frac(f, -1, 2, p - 1, 0, 0, e), LocalFraction(-(ue + ve.scaled(2)), 0, e),
                     LocalFraction(-(ue.scaled(2) + ve), 0, e), frac(f, -1, p - 1, 2, 0, 0, e)});
  return {hu, hw};
}

CheckResult check_transition_matrix(const GeneratorCatalog& cat, const FractionMatrix& t) {
  const auto& s1 = cat.at("s1").components;
  const auto& s2 = cat.at("s2").components;
  const auto& s3 = cat.at("s3").components;
  CheckLog log;
  for (int k = 0; k < 3; ++k) {
    const LocalFraction f1(s1[k], 1, 0);
    const LocalFraction f2(s2[k], 1, 0);
    log.require(LocalFraction(s2[k], 0, 1) == t(0, 0) * f1 + t(1, 0) * f2, "s2/w in the u-frame");
    log.require(LocalFraction(s3[k], 0, 1) == t(0, 1) * f1 + t(1, 1) * f2, "s3/w in the u-frame");
    // u^2 w times the second identity.
    const CurvePolynomial cleared = s3[k].shifted(2, 0, 0) - s2[k].shifted(0, 2, 0) + s1[k].shifted(0, 0, 2);
    log.require(cleared.is_zero(), "cleared relation u^2 s3 - v^2 s2 + w^2 s1");
  }
  return log.result("transition matrix from the frames");
}

CheckResult check_base_change(const GeneratorCatalog& cat, const HMatrices& h) {
  const std::uint32_t p = cat.fermat.p();
  struct Chart {
    const char* name;
    const FractionMatrix* hm;
    std::array<const char*, 2> primes;
    std::array<const char*, 2> plain;
    bool at_u;
  };
  const Chart charts[] = {{"U", &h.on_u, {"s1'", "s2'"}, {"s1", "s2"}, true},
                          {"W", &h.on_w, {"s2'", "s3'"}, {"s2", "s3"}, false}};
  CheckLog log;
  for (const Chart& c : charts) {
    auto over = [&](const CurvePolynomial& num, std::uint32_t power) {
      return c.at_u ? LocalFraction(num, power, 0) : LocalFraction(num, 0, power);
    };
    auto chart_power = [&](std::uint32_t power) {
      return c.at_u ? CurvePolynomial::monomial(cat.fermat, 1, power, 0, 0)
                    : CurvePolynomial::monomial(cat.fermat, 1, 0, 0, power);
    };
    for (int j = 0; j < 2; ++j) {
      const auto& sp = cat.at(c.primes[j]).components;
      for (int k = 0; k < 3; ++k) {
        const CurvePolynomial b0 = cat.at(c.plain[0]).components[k].p_power();
        const CurvePolynomial b1 = cat.at(c.plain[1]).components[k].p_power();
        const LocalFraction rhs = (*c.hm)(0, j) * over(b0, p) + (*c.hm)(1, j) * over(b1, p);
        const std::string what = std::string(c.primes[j]) + " component " + std::to_string(k + 1) + " on " + c.name;
        log.require(over(sp[k], 1) == rhs, what);

        // Clear denominators: c^{2p} s' = sum (c^{p+1} H_ij) s_i^p.
        const LocalFraction h0 = (*c.hm)(0, j) * over(chart_power(p + 1), 0);
        const LocalFraction h1 = (*c.hm)(1, j) * over(chart_power(p + 1), 0);
        const bool polynomial = h0.u_exponent() == 0 && h0.w_exponent() == 0 && h1.u_exponent() == 0 &&
                                h1.w_exponent() == 0;
        log.require(polynomial && sp[k] * chart_power(2 * p) == h0.numerator() * b0 + h1.numerator() * b1,
                    what + " (cleared)");
      }
    }
  }
  return log.result("base change on both charts");
}

CheckResult check_determinants(const FractionMatrix& t, const HMatrices& h) {
  const CurveContext& f = t(0, 0).context();
  CheckLog log;
  const LocalFraction dt = determinant(t);
  const LocalFraction du = determinant(h.on_u);
  const LocalFraction dw = determinant(h.on_w);
  log.require(dt == LocalFraction::constant(f, 1), "det T = " + dt.to_string());
  log.require(du == LocalFraction::constant(f, -2), "det H_U = " + du.to_string());
  log.require(dw == LocalFraction::constant(f, -2), "det H_W = " + dw.to_string());
  return log.result("det T = 1, det H_U = det H_W = -2");
}

CheckResult cocycle_check(const FractionMatrix& t, const HMatrices& h) {
  const FractionMatrix rhs = frobenius_twist(t) * h.on_w * inverse(t);
  CheckLog log;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      log.require(h.on_u(i, j) == rhs(i, j), "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                  "): " + h.on_u(i, j).to_string() + " vs " + rhs(i, j).to_string());
    }
  }
  return log.result("H_U = T^(p) H_W T^-1");
}

CheckResult cocycle_check(const CurveContext& fermat) {
  return cocycle_check(transition_matrix(fermat), h_matrices(fermat));
}

FormalMatrix relation_matrix(const FormalMatrix& a, const FractionMatrix& h) {
  const FormalSet set = a(0, 0).variables();
  const FormalPolynomial det = determinant(a);
  return frobenius_twist(a) * adjugate(a) - to_formal(h, set).scaled(det);
}

std::array<FormalPolynomial, 4> gluing_substitution(const CurveContext& f) {
  const FormalSet g = FormalSet::Greek;
  const LocalFraction w_u = frac(f, -1, 0, 0, 1, 1, 0);
  const LocalFraction u_w = frac(f, 1, 1, 0, 0, 0, 1);
  const LocalFraction v2_uw = frac(f, 1, 0, 2, 0, 1, 1);
  return {var(f, g, 2).scaled(w_u), var(f, g, 3).scaled(w_u),
          var(f, g, 0).scaled(u_w) + var(f, g, 2).scaled(v2_uw), var(f, g, 1).scaled(u_w) + var(f, g, 3).scaled(v2_uw)};
}

CoverData build_relations(const CurveContext& f) {
  const std::uint32_t e = f.p() + 1;
  FractionMatrix t = transition_matrix(f);
  HMatrices h = h_matrices(f);
  const FormalMatrix mu = relation_matrix(indeterminate_matrix(f, FormalSet::Abcd), h.on_u);
  const FormalMatrix mw = relation_matrix(indeterminate_matrix(f, FormalSet::Greek), h.on_w);
  const LocalFraction ue = frac(f, 1, e, 0, 0);
  const LocalFraction we = frac(f, 1, 0, 0, e);
  auto cleared = [](const FormalMatrix& m, const LocalFraction& c) {
    return std::array<FormalPolynomial, 4>{m(0, 0).scaled(c), m(0, 1).scaled(c), m(1, 0).scaled(c),
                                           m(1, 1).scaled(c)};
  };
  return CoverData{t, h, cleared(mu, ue), cleared(mw, we), gluing_substitution(f)};
}

CheckResult check_relations(const CoverData& data) {
  const CurveContext& f = data.t(0, 0).context();
  const std::uint32_t p = f.p();
  CheckLog log;
  auto check_chart = [&](const std::array<FormalPolynomial, 4>& rel, FormalSet set, const FractionMatrix& h,
                         const LocalFraction& clear, const std::string& chart) {
    const FormalMatrix a = indeterminate_matrix(f, set);
    const FormalMatrix top = frobenius_twist(a) * adjugate(a);
    const FormalMatrix low = to_formal(h, set).scaled(-determinant(a));
    for (int k = 0; k < 4; ++k) {
      const std::string what = chart + " relation " + entry_name(k);
      bool polynomial = true;
      for (const auto& [exps, c] : rel[k].terms()) polynomial = polynomial && c.u_exponent() == 0 && c.w_exponent() == 0;
      log.require(polynomial, what + " has polynomial coefficients");
      log.require(rel[k].homogeneous_part(p + 1) == top.entries()[k].scaled(clear), what + " degree p+1 part");
      log.require(rel[k].homogeneous_part(2) == low.entries()[k].scaled(clear), what + " degree 2 part");
      log.require(rel[k].formal_degrees() == std::set<std::uint32_t>{2, p + 1}, what + " formal degrees {2, p+1}");
    }
  };
  check_chart(data.relations_u, FormalSet::Abcd, data.h.on_u, frac(f, 1, p + 1, 0, 0), "U");
  check_chart(data.relations_w, FormalSet::Greek, data.h.on_w, frac(f, 1, 0, 0, p + 1), "W");
  return log.result("4 relations per chart");
}

CheckResult gluing_substitution_check(const CoverData& data, const FractionMatrix& t) {
  const CurveContext& f = t(0, 0).context();
  const FormalMatrix b = indeterminate_matrix(f, FormalSet::Greek);
  const FormalMatrix tf = to_formal(t, FormalSet::Greek);
  const FormalMatrix tb = tf * b;
  CheckLog log;
  static const char* names[] = {"a", "b", "c", "d"};
  for (int k = 0; k < 4; ++k) {
    log.require(tb.entries()[k] == data.substitution[k],
                std::string(names[k]) + " = " + data.substitution[k].to_string() + " vs (TB) " +
                    tb.entries()[k].to_string());
  }
  const FormalPolynomial det_a = determinant(indeterminate_matrix(f, FormalSet::Abcd));
  log.require(det_a.substitute(data.substitution) == determinant(b), "ad - bc = alpha delta - beta gamma");

  const FormalMatrix lhs = relation_matrix(tb, data.h.on_u);
  const FormalMatrix rhs = frobenius_twist(tf) * relation_matrix(b, data.h.on_w) * adjugate(tf);
  for (int k = 0; k < 4; ++k) {
    log.require(lhs.entries()[k] == rhs.entries()[k], std::string("M_U(TB) = T^(p) M_W(B) adj T at ") + entry_name(k));
  }
  return log.result("A = T B");
}

CheckResult gluing_substitution_check(const CoverData& data) { return gluing_substitution_check(data, data.t); }

namespace {

struct MembershipTerms {
  FormalPolynomial first;   // (u^2/w) alpha + (v^2/w) gamma
  FormalPolynomial second;  // (u^2/w) beta + (v^2/w) delta
  FormalPolynomial w_alpha, w_beta, w_gamma, w_delta;
};

MembershipTerms membership_terms(const CurveContext& f) {
  const FormalSet g = FormalSet::Greek;
  const LocalFraction u2_w = frac(f, 1, 2, 0, 0, 0, 1);
  const LocalFraction v2_w = frac(f, 1, 0, 2, 0, 0, 1);
  const LocalFraction w = frac(f, 1, 0, 0, 1);
  return {var(f, g, 0).scaled(u2_w) + var(f, g, 2).scaled(v2_w),
          var(f, g, 1).scaled(u2_w) + var(f, g, 3).scaled(v2_w),
          var(f, g, 0).scaled(w),
          var(f, g, 1).scaled(w),
          var(f, g, 2).scaled(w),
          var(f, g, 3).scaled(w)};
}

}  // namespace

CheckResult section_ring_identity_check(const CurveContext& f) {
  const MembershipTerms m = membership_terms(f);
  const LocalFraction u = frac(f, 1, 1, 0, 0);
  const LocalFraction u2 = frac(f, 1, 2, 0, 0);
  const LocalFraction v2 = frac(f, 1, 0, 2, 0);
  const LocalFraction w2 = frac(f, 1, 0, 0, 2);
  CheckLog log;
  log.require(m.first.scaled(w2) - m.w_gamma.scaled(v2) == m.w_alpha.scaled(u2), "w alpha membership");
  log.require(m.second.scaled(w2) - m.w_delta.scaled(v2) == m.w_beta.scaled(u2), "w beta membership");

  // Generators of the localised chart algebra in terms of a, b, c, d.
  const auto s = gluing_substitution(f);
  log.require(m.w_gamma == -s[0].scaled(u), "w gamma = -u a");
  log.require(m.w_delta == -s[1].scaled(u), "w delta = -u b");
  log.require(m.first == s[2].scaled(u), "(u^2/w) alpha + (v^2/w) gamma = u c");
  log.require(m.second == s[3].scaled(u), "(u^2/w) beta + (v^2/w) delta = u d");
  return log.result("section ring membership identities");
}

bool literal_second_membership_holds(const CurveContext& f) {
  const MembershipTerms m = membership_terms(f);
  const LocalFraction u2 = frac(f, 1, 2, 0, 0);
  const LocalFraction w2 = frac(f, 1, 0, 0, 2);
  return m.second.scaled(w2) - m.w_delta.scaled(u2) == m.w_beta.scaled(u2);
}

CheckResult det_periodicity_check(const CoverData& data) {
  const CurveContext& f = data.t(0, 0).context();
  const std::uint32_t p = f.p();
  CheckLog log;
  const std::pair<FormalSet, const FractionMatrix*> charts[] = {{FormalSet::Abcd, &data.h.on_u},
                                                                {FormalSet::Greek, &data.h.on_w}};
  for (const auto& [set, h] : charts) {
    const std::string chart = set == FormalSet::Abcd ? "U" : "W";
    const FormalMatrix a = indeterminate_matrix(f, set);
    const FormalPolynomial det = determinant(a);
    log.require(determinant(frobenius_twist(a)) == det.pow(p), chart + ": det A^(p) = (det A)^p");
    const LocalFraction dh = determinant(*h);
    log.require(dh == LocalFraction::constant(f, -2), chart + ": det H = " + dh.to_string());
    log.require(determinant(to_formal(*h, set) * a) == det.scaled(dh), chart + ": det(H A) = det H det A");
  }
  return log.result("(det A)^p = -2 det A on both charts");
}

CurvePolynomial reduce_at_w0(const CurvePolynomial& f) {
  const CurveContext& ctx = f.context();
  const std::uint32_t e = ctx.relation_degree();
  std::vector<std::pair<Monomial, std::int64_t>> raw;
  for (const auto& [m, c] : f.terms()) {
    if (m[2] > 0) continue;
    const std::uint32_t q = m[1] / e;
    const std::uint32_t r = m[1] % e;
    raw.push_back({{m[0] + q * e, r, 0}, q % 2 == 0 ? std::int64_t{c} : -std::int64_t{c}});
  }
  return CurvePolynomial::normal_form(ctx, raw);
}

std::array<FormalPolynomial, 4> specialize_w0(const CoverData& data) {
  auto reduce = [](const LocalFraction& x) {
    if (x.w_exponent() > 0) throw std::domain_error("coefficient has w in its denominator: " + x.to_string());
    return LocalFraction(reduce_at_w0(x.numerator()), x.u_exponent(), 0);
  };
  std::array<FormalPolynomial, 4> out{data.relations_u};
  for (auto& r : out) r = r.map_coefficients(reduce);
  return out;
}

std::array<FormalPolynomial, 4> w0_generators(const CurveContext& f) {
  const FormalSet s = FormalSet::Abcd;
  const std::uint32_t p = f.p();
  const FormalPolynomial a = var(f, s, 0), b = var(f, s, 1), c = var(f, s, 2), d = var(f, s, 3);
  const FormalPolynomial det = a * d - b * c;
  const FormalPolynomial two = FormalPolynomial::constant(f, s, 2);
  return {a.pow(p) * d - c * b.pow(p), b.pow(p) * a - a.pow(p) * b - det, c.pow(p) * d - c * d.pow(p) - two * det,
          d.pow(p) * a - b * c.pow(p)};
}

CheckResult w0_specialization_check(const CoverData& data) {
  const CurveContext& f = data.t(0, 0).context();
  const auto specialized = specialize_w0(data);
  const auto gens = w0_generators(f);
  CheckLog log;
  for (int k = 0; k < 4; ++k) {
    const std::string what = std::string("relation ") + entry_name(k);
    const auto& [exps, g0] = *gens[k].terms().begin();
    const LocalFraction unit = specialized[k].coefficient(exps) * g0.inverse();
    log.require(unit.is_unit(), what + ": leading coefficient " + unit.to_string() + " is not a unit monomial");
    log.require(specialized[k] == gens[k].scaled(unit), what + " specialises to " + specialized[k].to_string());
    log.require(!specialized[k].formal_degrees().contains(0), what + " lies in (a, b, c, d)");
  }
  return log.result("w = 0 specialisation matches the generators");
}

}  // namespace frobcover
