#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace pentaglobe::tools {

struct CheckResult {
  int criterion = 0;
  std::string name;
  std::string reference;
  std::string expected;
  std::string computed;
  bool pass = false;
  double seconds = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool ok() const;
};

const nlohmann::json& embedded_expected();

// Runs every criterion; results come back in criterion order whatever the thread count.
VerificationReport verify_all(const nlohmann::json& expected, int max_n, unsigned threads);

std::string to_text(const VerificationReport& r);
nlohmann::json to_json(const VerificationReport& r);

}  // namespace pentaglobe::tools
