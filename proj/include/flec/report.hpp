#ifndef FLEC_REPORT_HPP
#define FLEC_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace flec {

/// One failed check: the law that failed and a printable witness.
struct Violation {
  std::string law;
  std::string witness;
};

/// Outcome of a validation or law-suite run. `checks` counts every
/// individual check performed; a run passes when no check failed.
struct Report {
  std::string suite;
  long checks = 0;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
  void add(std::string law, std::string witness) {
    violations.push_back({std::move(law), std::move(witness)});
  }
  void merge(const Report& other) {
    checks += other.checks;
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }

  /// "PASS <suite> 0" or "FAIL <suite> <count>".
  std::string summary_line() const;
  /// Multi-line human-readable form, ending with the summary line.
  std::string to_string() const;
};

/// Parameters for randomized checks: coordinates are drawn from
/// [-window, window], `samples` tuples per law, deterministic in `seed`.
struct CheckConfig {
  int window = 8;
  int samples = 500;
  std::uint64_t seed = 0x5eedULL;
};

}  // namespace flec

#endif
