#include "qmcipl/rulefile.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qmcipl/criterion.hpp"

namespace qmcipl {

using nlohmann::json;

RuleFile make_rule_file(const CbcResult& result, const std::string& mode) {
  RuleFile rule;
  rule.mode = mode;
  rule.spec = result.spec;
  rule.trace = result.trace;
  rule.final_b_u = result.trace.empty() ? 0.0 : result.trace.back().b_u;
  CriterionValue cv;
  cv.b_u = rule.final_b_u;
  cv.c_u_minus_one = c_u_minus_one(result.spec);
  rule.final_wce_bound = cv.wce_bound();
  return rule;
}

namespace {

json poly_to_json(const GFPolynomial& p) {
  return json{{"b", p.base()}, {"enc", p.encoding()}};
}

GFPolynomial poly_from_json(const json& j) {
  return GFPolynomial::from_encoding(j.at("b").get<uint32_t>(),
                                     j.at("enc").get<uint64_t>());
}

}  // namespace

std::string rule_to_json(const RuleFile& rule) {
  json j;
  j["schema"] = rule.schema;
  j["tool"] = rule.tool;
  j["mode"] = rule.mode;
  j["b"] = rule.spec.b;
  j["m"] = rule.spec.m;
  j["s"] = rule.spec.s;
  j["d"] = rule.spec.d;
  if (auto r = rule.spec.weights.decay()) {
    j["weights"] = json{{"r", *r}};
  } else {
    j["weights"] = json{{"u", rule.spec.weights.raw_weights()}};
  }
  j["p"] = poly_to_json(rule.spec.p);
  j["q"] = json::array();
  for (const auto& qj : rule.spec.q) j["q"].push_back(poly_to_json(qj));
  j["trace"] = json::array();
  for (const auto& step : rule.trace)
    j["trace"].push_back(json{{"tau", step.tau}, {"q", step.q_enc}, {"b_u", step.b_u}});
  j["b_u"] = rule.final_b_u;
  j["wce_bound"] = rule.final_wce_bound;
  return j.dump(2) + "\n";
}

void save_rule(const RuleFile& rule, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("save_rule: cannot open " + path);
  os << rule_to_json(rule);
}

RuleFile rule_from_json(const std::string& text) {
  json j = json::parse(text);
  RuleFile rule;
  rule.schema = j.at("schema").get<int>();
  if (rule.schema != kRuleSchemaVersion)
    throw std::runtime_error("rule file: unsupported schema version");
  rule.tool = j.value("tool", "");
  rule.mode = j.at("mode").get<std::string>();
  if (rule.mode != "naive" && rule.mode != "fast")
    throw std::runtime_error("rule file: mode must be naive or fast");

  RuleSpec spec;
  spec.b = j.at("b").get<uint32_t>();
  spec.m = j.at("m").get<int>();
  spec.s = j.at("s").get<int>();
  spec.d = j.at("d").get<int>();
  const json& jw = j.at("weights");
  if (jw.contains("r")) {
    spec.weights = WeightProfile::power_decay(spec.b, jw.at("r").get<double>(), spec.s);
  } else {
    spec.weights =
        WeightProfile::from_weights(spec.b, jw.at("u").get<std::vector<double>>());
  }
  spec.p = poly_from_json(j.at("p"));
  for (const auto& jq : j.at("q")) spec.q.push_back(poly_from_json(jq));
  rule.spec = std::move(spec);
  rule.spec.validate();

  for (const auto& jt : j.at("trace")) {
    rule.trace.push_back(CbcStep{jt.at("tau").get<int>(),
                                 jt.at("q").get<uint64_t>(),
                                 jt.at("b_u").get<double>(), 0.0});
  }
  rule.final_b_u = j.at("b_u").get<double>();
  rule.final_wce_bound = j.at("wce_bound").get<double>();

  double recomputed = b_u(rule.spec);
  double tol = 1e-10 * std::max(1.0, std::abs(rule.final_b_u));
  if (std::abs(recomputed - rule.final_b_u) > tol)
    throw std::runtime_error("rule file: recorded B_u does not match a recomputation");
  return rule;
}

RuleFile load_rule(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("load_rule: cannot open " + path);
  std::ostringstream buf;
  buf << is.rdbuf();
  return rule_from_json(buf.str());
}

}  // namespace qmcipl
