#pragma once

#include <string>
#include <utility>
#include <vector>

namespace frobcover {

/// Outcome of one verification step.
struct CheckResult {
  bool ok = true;
  std::string detail;

  explicit operator bool() const noexcept { return ok; }
};

/// Collects individual assertions; the first few failures end up in the detail.
class CheckLog {
 public:
  void require(bool condition, const std::string& what) {
    ++total_;
    if (!condition) failures_.push_back(what);
  }

  /// Merge a sub-check; its detail is kept when it fails.
  void require(const CheckResult& r, const std::string& what) {
    require(r.ok, r.ok ? what : what + ": " + r.detail);
  }

  bool ok() const noexcept { return failures_.empty(); }
  std::size_t total() const noexcept { return total_; }
  const std::vector<std::string>& failures() const noexcept { return failures_; }

  CheckResult result(const std::string& summary) const {
    if (failures_.empty()) return {true, summary + " (" + std::to_string(total_) + " assertions)"};
    std::string d = std::to_string(failures_.size()) + " of " + std::to_string(total_) + " failed: ";
    for (std::size_t i = 0; i < failures_.size() && i < 4; ++i) {
      if (i > 0) d += "; ";
      d += failures_[i];
    }
    if (failures_.size() > 4) d += "; ...";
    return {false, d};
  }

 private:
  std::size_t total_ = 0;
  std::vector<std::string> failures_;
};

}  // namespace frobcover
