#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace matstar {

struct SuiteItem {
  std::string id;
  std::string description;
  bool passed = true;
  std::vector<std::string> details;
};

struct SuiteReport {
  std::size_t n = 3;
  std::uint64_t seed = 0;
  std::vector<SuiteItem> items;
  bool passed() const;
};

/// Whole-result regression: trace preservation, the vanishing identities,
/// the associativity residual, lambda/z fitting, symbolic classification at
/// n and n = 2, the GF(2) census and the characteristic-two adjudication.
/// Output depends only on (n, seed).
SuiteReport run_verification_suite(std::size_t n = 3, std::uint64_t seed = 0);

}  // namespace matstar
