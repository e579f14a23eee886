#pragma once

#include <string>

#include "qmcipl/cbc.hpp"

namespace qmcipl {

inline constexpr int kRuleSchemaVersion = 1;
inline constexpr const char* kToolVersion = "qmcipl 1.0.0";

/// On-disk record of a constructed rule: parameters, generating vector as
/// integer encodings, the per-step B_u trace, and the construction mode.
struct RuleFile {
  int schema = kRuleSchemaVersion;
  std::string tool = kToolVersion;
  std::string mode = "fast";  // "naive" | "fast"
  RuleSpec spec;
  std::vector<CbcStep> trace;
  double final_b_u = 0.0;
  double final_wce_bound = 0.0;
};

RuleFile make_rule_file(const CbcResult& result, const std::string& mode);

std::string rule_to_json(const RuleFile& rule);
void save_rule(const RuleFile& rule, const std::string& path);

/// Parses, re-validates every RuleSpec invariant, and recomputes the final
/// B_u against the recorded value (1e-10 tolerance).
RuleFile load_rule(const std::string& path);
RuleFile rule_from_json(const std::string& text);

}  // namespace qmcipl
