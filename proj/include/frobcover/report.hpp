#pragma once

// Per-prime verification run and its JSON / text rendering.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobcover/finite_field.hpp"

namespace frobcover {

inline constexpr const char* kEngineVersion = "1.0.0";

enum class CheckStatus { Pass, Fail, Skipped };

const char* to_string(CheckStatus s);
/// Throws std::invalid_argument for anything but "pass", "fail", "skipped".
CheckStatus parse_status(const std::string& s);

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;

  bool operator==(const CheckRecord&) const = default;
};

struct ReportStats {
  std::uint64_t components = 0;
  std::uint64_t total_fiber = 0;
  std::uint64_t degree = 0;
  std::uint64_t genus_base = 0;
  std::uint64_t genus_component = 0;
  std::uint64_t eta_field_degree = 0;
  std::uint64_t fiber_field_degree = 0;

  bool operator==(const ReportStats&) const = default;
};

struct EngineInfo {
  std::string version = kEngineVersion;
  std::uint64_t seed = 0;

  bool operator==(const EngineInfo&) const = default;
};

struct CoverReport {
  std::uint32_t prime = 0;
  std::vector<CheckRecord> checks;
  ReportStats stats;
  EngineInfo engine;

  /// No check failed; skipped checks do not count against the run.
  bool passed() const;
  const CheckRecord* find(const std::string& name) const;

  bool operator==(const CoverReport&) const = default;
};

struct CheckSelection {
  bool lemmas = true;
  bool cover = true;
  bool fiber = true;

  static CheckSelection all() { return {}; }
  static CheckSelection none() { return {false, false, false}; }
  /// Comma-separated subset of lemmas, cover, fiber, all, none. Throws
  /// std::invalid_argument on unknown names.
  static CheckSelection parse(const std::string& text);
};

struct VerifyOptions {
  CheckSelection selection;
  /// Largest field the census and the scans may enumerate.
  std::uint64_t max_field_size = kDefaultEnumerationCap;
  std::uint64_t seed = 0;
  /// Catalog entry whose leading term changes sign before the checks run.
  std::optional<std::string> mutate;
};

/// Throws std::invalid_argument unless p is an odd prime below 2^16 and the
/// mutated entry, if any, exists. Checks that throw are recorded as failures
/// carrying the message.
CoverReport run_verification(std::uint32_t p, const VerifyOptions& options = {});

/// Check names in run order.
const std::vector<std::string>& lemma_check_names();
const std::vector<std::string>& cover_check_names();
const std::vector<std::string>& fiber_check_names();

enum class ReportFormat { Json, Text };

std::string to_json(const CoverReport& r);
std::string to_json(const std::vector<CoverReport>& rs);
std::string to_text(const CoverReport& r);
std::string render(const CoverReport& r, ReportFormat format);
std::string render(const std::vector<CoverReport>& rs, ReportFormat format);

/// Inverse of to_json for a single report. Throws std::invalid_argument on
/// malformed input.
CoverReport parse_report(const std::string& json);

}  // namespace frobcover
