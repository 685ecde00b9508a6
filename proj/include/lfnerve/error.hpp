#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lfnerve {

/// One failed law, with the cells or simplices that witness the failure.
struct Violation {
  std::string law;
  std::vector<std::string> witnesses;

  std::string to_string() const {
    std::string out = law;
    if (!witnesses.empty()) {
      out += ": ";
      for (std::size_t i = 0; i < witnesses.size(); ++i) {
        if (i) out += ", ";
        out += witnesses[i];
      }
    }
    return out;
  }

  bool operator==(const Violation&) const = default;
};

/// Thrown by every validate_* entry point; carries the complete list of violations.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations)
      : std::runtime_error(summarize(violations)), violations_(std::move(violations)) {}

  ValidationError(std::string law, std::vector<std::string> witnesses)
      : ValidationError(std::vector<Violation>{{std::move(law), std::move(witnesses)}}) {}

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  static std::string summarize(const std::vector<Violation>& vs) {
    std::string out;
    for (const auto& v : vs) {
      if (!out.empty()) out += "\n";
      out += v.to_string();
    }
    return out.empty() ? std::string("validation failed") : out;
  }

  std::vector<Violation> violations_;
};

inline void throw_if_any(std::vector<Violation> violations) {
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

/// Raised when an exhaustive search would exceed its configured branch budget.
class SizeLimitExceeded : public std::runtime_error {
 public:
  explicit SizeLimitExceeded(std::uint64_t limit)
      : std::runtime_error("search exceeded the size guard of " + std::to_string(limit) +
                           " candidate branches; raise it with --size-guard or LFNERVE_SIZE_GUARD"),
        limit_(limit) {}
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

inline constexpr std::uint64_t kDefaultSizeGuard = 10'000'000;

/// Default branch budget, overridable through the LFNERVE_SIZE_GUARD environment variable.
inline std::uint64_t default_size_guard() {
  if (const char* env = std::getenv("LFNERVE_SIZE_GUARD")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultSizeGuard;
}

/// Counts candidate branches across an exhaustive search.
class SearchBudget {
 public:
  explicit SearchBudget(std::uint64_t limit = default_size_guard()) : limit_(limit) {}

  void charge(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) throw SizeLimitExceeded(limit_);
  }
  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace lfnerve
