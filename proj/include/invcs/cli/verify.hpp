#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace invcs::cli {

struct PropertyCheck {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs one of operators | eigen | duality | moments | all.
/// Throws InvalidParameter for an unknown suite name.
std::vector<PropertyCheck> run_suite(std::string_view suite);

}  // namespace invcs::cli
