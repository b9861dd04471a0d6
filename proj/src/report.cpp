#include <algorithm>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "frobcover/cover.hpp"
#include "frobcover/fiber.hpp"
#include "frobcover/matrix_ideal_shift.hpp"
#include "frobcover/oracle.hpp"
#include "frobcover/report.hpp"
#include "frobcover/syzygy.hpp"

namespace frobcover {

using ordered_json = nlohmann::ordered_json;

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "fail";
}

CheckStatus parse_status(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "skipped") return CheckStatus::Skipped;
  throw std::invalid_argument("unknown check status '" + s + "'");
}

bool CoverReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == CheckStatus::Fail; });
}

const CheckRecord* CoverReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

CheckSelection CheckSelection::parse(const std::string& text) {
  CheckSelection s = none();
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "lemmas") {
      s.lemmas = true;
    } else if (item == "cover") {
      s.cover = true;
    } else if (item == "fiber") {
      s.fiber = true;
    } else if (item == "all") {
      s = all();
    } else if (item != "none") {
      throw std::invalid_argument("unknown check set '" + item + "'");
    }
  }
  return s;
}

const std::vector<std::string>& lemma_check_names() {
  static const std::vector<std::string> names{"syzygy.catalog",      "syzygy.kernel_relation",
                                              "syzygy.alpha",        "syzygy.alpha_substitution",
                                              "syzygy.independence", "syzygy.evaluation_oracle"};
  return names;
}

const std::vector<std::string>& cover_check_names() {
  static const std::vector<std::string> names{
      "cover.transition_matrix", "cover.h_matrices",         "cover.base_change",  "cover.cocycle",
      "cover.relations",         "cover.gluing",             "cover.section_ring", "cover.det_periodicity",
      "cover.w0_specialization", "cover.matrix_ideal_shift", "cover.evaluation_oracle"};
  return names;
}

const std::vector<std::string>& fiber_check_names() {
  static const std::vector<std::string> names{"fiber.census",     "fiber.point_equations",   "fiber.relations_at_point",
                                              "fiber.structure",  "fiber.formula_agreement", "fiber.hurwitz",
                                              "fiber.eta_field"};
  return names;
}

namespace {

struct Outcome {
  CheckStatus status;
  std::string detail;

  Outcome(CheckStatus s, std::string d) : status(s), detail(std::move(d)) {}
  Outcome(const CheckResult& r) : status(r.ok ? CheckStatus::Pass : CheckStatus::Fail), detail(r.detail) {}
};

class Runner {
 public:
  explicit Runner(CoverReport& r) : r_(r) {}

  void operator()(const std::string& name, const std::function<Outcome()>& check) {
    try {
      const Outcome o = check();
      r_.checks.push_back({name, o.status, o.detail});
    } catch (const std::exception& e) {
      r_.checks.push_back({name, CheckStatus::Fail, std::string("error: ") + e.what()});
    }
  }

 private:
  CoverReport& r_;
};

std::string field_name(std::uint32_t p, std::uint32_t m) { return "F_" + std::to_string(p) + "^" + std::to_string(m); }

void run_lemma_checks(Runner& run, const GeneratorCatalog& cat, std::uint64_t seed) {
  const auto& n = lemma_check_names();
  run(n[0], [&] { return check_catalog(cat); });
  run(n[1], [&] { return check_kernel_relation(cat); });
  run(n[2], [&] { return check_alpha(cat); });
  run(n[3], [&] { return check_alpha_substitution(cat, periodicity_map(cat)); });
  run(n[4], [&] { return check_independence(cat); });
  run(n[5], [&] { return syzygy_evaluation_oracle(cat, {20, seed}); });
}

void run_cover_checks(Runner& run, const GeneratorCatalog& cat, const CoverData& data, std::uint64_t seed) {
  const auto& n = cover_check_names();
  const CurveContext& f = cat.fermat;
  run(n[0], [&] { return check_transition_matrix(cat, data.t); });
  run(n[1], [&] { return check_determinants(data.t, data.h); });
  run(n[2], [&] { return check_base_change(cat, data.h); });
  run(n[3], [&] { return cocycle_check(data.t, data.h); });
  run(n[4], [&] { return check_relations(data); });
  run(n[5], [&] { return gluing_substitution_check(data); });
  run(n[6], [&] {
    CheckLog log;
    log.require(section_ring_identity_check(f), "corrected membership identities");
    log.require(!literal_second_membership_holds(f), "form with u^2 w delta is not an identity");
    return log.result("membership identities; the u^2 w delta form fails as expected");
  });
  run(n[7], [&] { return det_periodicity_check(data); });
  run(n[8], [&] { return w0_specialization_check(data); });
  run(n[9], [&] { return matrix_ideal_shift_check(seed); });
  run(n[10], [&] { return cover_evaluation_oracle(cat, data, {20, seed}); });
}

void run_fiber_checks(Runner& run, std::uint32_t p, const VerifyOptions& options, const CoverData& data,
                      const ComponentStats& formulas, ReportStats& stats) {
  const auto& n = fiber_check_names();
  const std::uint32_t m = fiber_field_degree(p);
  std::optional<FiberCensus> census;
  run(n[0], [&]() -> Outcome {
    census = enumerate_fiber(p, options.max_field_size);
    if (!census) {
      return {CheckStatus::Skipped, field_name(p, m) + " exceeds the field size cap " +
                                        std::to_string(options.max_field_size) + "; formulas reported"};
    }
    return {census->points.empty() ? CheckStatus::Fail : CheckStatus::Pass,
            std::to_string(census->points.size()) + " points over " + field_name(p, m) + " from " +
                std::to_string(census->roots.size()) + " roots of c^" + std::to_string(p * p - 1) + " = 2"};
  });
  const auto needs_census = [&](const std::string& name, const std::function<Outcome()>& check) {
    run(name, [&]() -> Outcome {
      if (!census) return {CheckStatus::Skipped, "census skipped"};
      return check();
    });
  };
  needs_census(n[1], [&] { return check_fiber_points(*census); });
  needs_census(n[2], [&] { return check_relations_at_base_point(*census, data); });
  needs_census(n[3], [&] { return check_fiber_structure(*census); });
  needs_census(n[4], [&] {
    const std::uint64_t total = census->points.size();
    CheckLog log;
    log.require(total == fiber_size_formula(p), "total " + std::to_string(total) + " vs (p^2-1) p (p-1) = " +
                                                    std::to_string(fiber_size_formula(p)));
    log.require(total % formulas.component_count == 0, "p-1 divides the total");
    log.require(total / formulas.component_count == formulas.degree_per_component,
                "total/(p-1) = " + std::to_string(total / formulas.component_count));
    return log.result("census total " + std::to_string(total) + " = (p^2-1) p (p-1), degree " +
                      std::to_string(total / formulas.component_count) + " per component");
  });
  if (census) stats.total_fiber = census->points.size();
  run(n[5], [&] {
    return CheckResult{hurwitz_consistent(formulas),
                       "2*" + std::to_string(formulas.genus_component) + " - 2 = " +
                           std::to_string(formulas.degree_per_component) + " * (2*" +
                           std::to_string(formulas.genus_base) + " - 2)"};
  });
  run(n[6], [&] { return confirm_eta_field_degree(p, options.max_field_size); });
}

void require_valid_prime(std::uint32_t p) {
  if (p < 3 || p >= (1u << 16) || !is_prime(p)) {
    throw std::invalid_argument("prime must be an odd prime below 65536, got " + std::to_string(p));
  }
}

}  // namespace

CoverReport run_verification(std::uint32_t p, const VerifyOptions& options) {
  require_valid_prime(p);
  if (options.mutate) {
    const auto& names = catalog_names();
    if (std::find(names.begin(), names.end(), *options.mutate) == names.end()) {
      throw std::invalid_argument("no catalog entry '" + *options.mutate + "'");
    }
  }
  CoverReport r;
  r.prime = p;
  r.engine.seed = options.seed;

  const ComponentStats formulas = component_stats(p);
  r.stats = {formulas.component_count, formulas.total_fiber,     formulas.degree_per_component,
             formulas.genus_base,      formulas.genus_component, formulas.eta_field_degree,
             formulas.fiber_field_degree};

  const CheckSelection& sel = options.selection;
  if (!sel.lemmas && !sel.cover && !sel.fiber) return r;

  Runner run(r);
  GeneratorCatalog cat = build_catalog(p);
  if (options.mutate) {
    SyzygyTriple& e = cat.at(*options.mutate);
    const int k = e.components[0].is_zero() ? (e.components[1].is_zero() ? 2 : 1) : 0;
    e = flip_term_sign(e, k, 0);
  }
  const CoverData data = build_relations(cat.fermat);
  if (sel.lemmas) run_lemma_checks(run, cat, options.seed);
  if (sel.cover) run_cover_checks(run, cat, data, options.seed);
  if (sel.fiber) run_fiber_checks(run, p, options, data, formulas, r.stats);
  return r;
}

namespace {

ordered_json report_json(const CoverReport& r) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  const ReportStats& s = r.stats;
  return {{"prime", r.prime},
          {"overall", r.passed() ? "pass" : "fail"},
          {"checks", std::move(checks)},
          {"stats",
           {{"components", s.components},
            {"total_fiber", s.total_fiber},
            {"degree", s.degree},
            {"genus_base", s.genus_base},
            {"genus_component", s.genus_component},
            {"eta_field_degree", s.eta_field_degree},
            {"fiber_field_degree", s.fiber_field_degree}}},
          {"engine", {{"version", r.engine.version}, {"seed", r.engine.seed}}}};
}

}  // namespace

std::string to_json(const CoverReport& r) { return report_json(r).dump(2) + "\n"; }

std::string to_json(const std::vector<CoverReport>& rs) {
  ordered_json all = ordered_json::array();
  for (const auto& r : rs) all.push_back(report_json(r));
  return all.dump(2) + "\n";
}

std::string to_text(const CoverReport& r) {
  std::size_t width = 5;
  for (const auto& c : r.checks) width = std::max(width, c.name.size());
  std::ostringstream os;
  os << "prime " << r.prime << "  overall " << (r.passed() ? "pass" : "fail") << "  engine " << r.engine.version
     << "  seed " << r.engine.seed << "\n\n";
  if (!r.checks.empty()) {
    os << std::left << std::setw(static_cast<int>(width) + 2) << "check" << std::setw(9) << "status"
       << "detail\n";
    for (const auto& c : r.checks) {
      os << std::setw(static_cast<int>(width) + 2) << c.name << std::setw(9) << to_string(c.status) << c.detail
         << "\n";
    }
    os << "\n";
  }
  const ReportStats& s = r.stats;
  const std::pair<const char*, std::uint64_t> rows[] = {
      {"components", s.components},           {"total_fiber", s.total_fiber},
      {"degree", s.degree},                   {"genus_base", s.genus_base},
      {"genus_component", s.genus_component}, {"eta_field_degree", s.eta_field_degree},
      {"fiber_field_degree", s.fiber_field_degree}};
  for (const auto& [k, v] : rows) os << "  " << std::left << std::setw(20) << k << v << "\n";
  return os.str();
}

std::string render(const CoverReport& r, ReportFormat format) {
  return format == ReportFormat::Json ? to_json(r) : to_text(r);
}

std::string render(const std::vector<CoverReport>& rs, ReportFormat format) {
  if (format == ReportFormat::Json) return to_json(rs);
  std::string out;
  for (std::size_t i = 0; i < rs.size(); ++i) out += (i > 0 ? "\n" : "") + to_text(rs[i]);
  return out;
}

CoverReport parse_report(const std::string& text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    CoverReport r;
    r.prime = j.at("prime").get<std::uint32_t>();
    for (const auto& c : j.at("checks")) {
      r.checks.push_back({c.at("name").get<std::string>(), parse_status(c.at("status").get<std::string>()),
                          c.at("detail").get<std::string>()});
    }
    const auto& s = j.at("stats");
    r.stats = {s.at("components").get<std::uint64_t>(),      s.at("total_fiber").get<std::uint64_t>(),
               s.at("degree").get<std::uint64_t>(),          s.at("genus_base").get<std::uint64_t>(),
               s.at("genus_component").get<std::uint64_t>(), s.at("eta_field_degree").get<std::uint64_t>(),
               s.at("fiber_field_degree").get<std::uint64_t>()};
    r.engine = {j.at("engine").at("version").get<std::string>(), j.at("engine").at("seed").get<std::uint64_t>()};
    if (j.at("overall").get<std::string>() != (r.passed() ? "pass" : "fail")) {
      throw std::invalid_argument("overall status disagrees with the checks");
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace frobcover
