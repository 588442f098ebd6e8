#pragma once

#include <functional>
#include <string>
#include <vector>

#include "retone/config.hpp"

// Built-in sanity checks runnable from the CLI (`retone selftest`) and reused
// by the unit tests. Each check returns an empty string on success or a
// short failure description.

namespace retone {

struct SelfTest {
  std::string name;
  std::function<std::string()> fn;
};

const std::vector<SelfTest>& selftest_registry();

struct SelfTestResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double ms = 0.0;
};

// Runs every registered check; exceptions count as failures.
std::vector<SelfTestResult> run_selftests();

// Small model configs the self checks (and fast tests) share.
GeneratorConfig tiny_generator_config();
DiscriminatorConfig tiny_discriminator_config();

}  // namespace retone
