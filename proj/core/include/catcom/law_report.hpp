#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace catcom {

// Outcome of an exhaustive law check. Each law that fails is listed once,
// with the first witness found in enumeration order.
struct LawFailure {
  std::string law;
  std::string witness;
};

struct LawCoverage {
  std::string law;
  std::size_t cases = 0;
  bool exhaustive = true;
};

class LawReport {
 public:
  bool ok() const { return failures_.empty(); }
  const std::vector<LawFailure>& failures() const { return failures_; }
  const std::vector<LawCoverage>& coverage() const { return coverage_; }

  bool failed(const std::string& law) const {
    for (const auto& f : failures_)
      if (f.law == law) return true;
    return false;
  }

  // Records a failure unless the law already has a witness.
  void fail(const std::string& law, std::string witness) {
    if (!failed(law)) failures_.push_back({law, std::move(witness)});
  }

  void count(const std::string& law, std::size_t cases, bool exhaustive) {
    for (auto& c : coverage_) {
      if (c.law == law) {
        c.cases += cases;
        c.exhaustive = c.exhaustive && exhaustive;
        return;
      }
    }
    coverage_.push_back({law, cases, exhaustive});
  }

  void merge(const LawReport& other) {
    for (const auto& f : other.failures_) fail(f.law, f.witness);
    for (const auto& c : other.coverage_) count(c.law, c.cases, c.exhaustive);
  }

  bool exhaustive() const {
    for (const auto& c : coverage_)
      if (!c.exhaustive) return false;
    return true;
  }

 private:
  std::vector<LawFailure> failures_;
  std::vector<LawCoverage> coverage_;
};

}  // namespace catcom
