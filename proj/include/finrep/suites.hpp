// Verification suites run by the CLI: spectral round trip and patching,
// restriction/assembly, equivalence transfer, orbit supports, transport to
// the induced model, and the hom correspondence.  Fault injection modes
// deliberately break one property to show the corresponding suite catches it.

#pragma once

#include "finrep/mackey.hpp"

#include <string>
#include <vector>

namespace finrep {

enum class FaultMode { none, break_covariance, drop_atom };

// "none" (or empty), "break-covariance", "drop-atom"; throws otherwise.
FaultMode fault_from_string(const std::string& s);

struct SuiteResult {
  std::string name;
  bool pass = true;
  double max_deviation = 0.0;
  std::vector<std::string> notes;
};

// {"thm1", "lemma1", "lemma2", "lemma3", "transport", "hom"}
const std::vector<std::string>& suite_names();

// Runs one suite (or "all") on the given group.  break-covariance tampers
// inside the restriction suite (lemma1), drop-atom inside the spectral suite
// (thm1); other suites are untouched by faults.
std::vector<SuiteResult> run_suites(const SemidirectPtr& g, const std::string& which,
                                    FaultMode fault = FaultMode::none,
                                    std::uint64_t seed = kDefaultSeed, double tol = 1e-9);

}  // namespace finrep
