// Seeded property runs: per-check counters and reproducible failure records.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace trihered {

struct CheckStat {
  std::string name;
  std::size_t runs = 0;
  std::size_t failures = 0;
};

struct CheckFailure {
  std::string check;
  std::uint64_t seed = 0;  // per-trial seed reproducing the failure
  std::string detail;
};

struct CheckReport {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<CheckStat> checks;
  std::vector<CheckFailure> failures;
  [[nodiscard]] bool passed() const { return failures.empty(); }
  [[nodiscard]] const CheckStat* find(const std::string& name) const;
};

/// splitmix64 of (master, trial).
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

class Recorder {
 public:
  explicit Recorder(CheckReport& report) : report_(report) {}

  void record(const std::string& check, std::uint64_t seed, bool ok, const std::string& detail = {});

  // Runs body(detail); an exception counts as a failure of the check.
  template <class Body>
  void run(const std::string& check, std::uint64_t seed, Body&& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    record(check, seed, ok, detail);
  }

 private:
  CheckReport& report_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace trihered
