#include "trihered/report.hpp"

namespace trihered {

const CheckStat* CheckReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  std::uint64_t z = master * 0x9E3779B97F4A7C15ULL + trial + 1;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void Recorder::record(const std::string& check, std::uint64_t seed, bool ok, const std::string& detail) {
  auto it = index_.find(check);
  if (it == index_.end()) {
    it = index_.emplace(check, report_.checks.size()).first;
    report_.checks.push_back({check, 0, 0});
  }
  CheckStat& c = report_.checks[it->second];
  ++c.runs;
  if (!ok) {
    ++c.failures;
    report_.failures.push_back({check, seed, detail});
  }
}

}  // namespace trihered
