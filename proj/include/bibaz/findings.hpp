#pragma once

// Print defects detected while auditing or verifying: a printed formula that
// disagrees with what the engine derives. Each finding carries the evidence.

#include <string>
#include <vector>

namespace bibaz {

struct Finding {
  std::string id;        // stable token, e.g. "reversion_w4_coefficient"
  std::string location;  // human label of the printed formula
  std::string printed;   // the printed form (or its evaluated value)
  std::string derived;   // what the engine derives instead
  std::string witness;   // concrete input that exposes the difference; may be empty
};

using Findings = std::vector<Finding>;

}  // namespace bibaz
