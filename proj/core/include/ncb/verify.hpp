#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ncb {

// Parameters of a verification run. Fields left at -1 take the property's
// documented default. Verdicts are pure functions of (property, params).
struct VerifyParams {
  int n = -1;
  int order = -1;
  int samples = -1;
  std::uint64_t seed = 1;
};

struct VerificationReport {
  std::string property;
  std::string params;
  bool pass = false;
  std::string detail;  // counterexample when failing, summary when passing
  double seconds = 0.0;
};

using VerifyFn = std::function<VerificationReport(const VerifyParams&)>;

// Registry of machine-checkable properties, keyed by id. Each entry
// exhaustively (or with seeded random sampling, exactly) checks one family
// of identities at desk scale.
const std::map<std::string, VerifyFn>& verify_registry();

// Runs one property; throws std::invalid_argument for unknown ids (the
// message lists the known ones).
VerificationReport run_verify(const std::string& id, const VerifyParams& params);

std::vector<std::string> verify_ids();

}  // namespace ncb
