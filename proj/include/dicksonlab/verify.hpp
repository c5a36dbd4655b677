/// Per-field self-verification suites: every structural invariant and
/// identity the library promises, runnable against one field and reported
/// suite by suite. The CLI's verify command is a thin wrapper over run().
///
/// Suites scale their sweeps down on large fields (strided sampling) but
/// never weaken an assertion: whatever is checked must hold exactly.

#pragma once

#include <string>

#include "dicksonlab/field.hpp"

namespace dicksonlab::verify {

struct SuiteResult {
  std::string name;
  bool applicable = true;  // false e.g. for odd-characteristic suites on p=2
  bool passed = true;
  std::uint64_t checks = 0;     // individual assertions evaluated
  std::string counterexample;   // first failure, empty when passed
};

std::vector<std::string> suite_names();

/// Runs the named suites (all when names is empty) against one field.
/// Unknown names throw std::invalid_argument.
std::vector<SuiteResult> run(const FieldSpec& spec,
                             const std::vector<std::string>& names = {});

}  // namespace dicksonlab::verify
