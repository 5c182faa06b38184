#include "lieop/render.hpp"

#include <json.hpp>

namespace lieop {

namespace {

using json = nlohmann::ordered_json;

json to_json(const Witness& w) {
  json j;
  j["indices"] = w.indices;
  std::vector<std::string> res;
  for (std::size_t i = 0; i < w.residual.dim(); ++i) res.push_back(w.residual[i].str());
  j["residual"] = res;
  return j;
}

json to_json(const CheckReport& rep) {
  json j;
  j["structure"] = to_string(rep.kind);
  j["overall"] = rep.overall() ? "pass" : "fail";
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json e;
    e["id"] = c.id;
    e["status"] = c.passed ? "pass" : "fail";
    if (!c.gating) e["informative"] = true;
    if (c.precondition) e["precondition"] = true;
    if (c.witness) e["witness"] = to_json(*c.witness);
    checks.push_back(e);
  }
  j["checks"] = checks;
  return j;
}

json to_json(const TowerReport& rep) {
  json j;
  j["family"] = to_string(rep.family);
  if (rep.family == TowerFamily::xvr) j["theta_variant"] = to_string(rep.variant);
  j["depth"] = rep.depth;
  j["overall"] = rep.all_levels_pass() ? "pass" : "fail";
  if (!rep.all_levels_pass()) j["first_failing_level"] = rep.first_failing_level();
  json levels = json::array();
  for (const auto& l : rep.levels) {
    json e;
    e["n"] = l.n;
    if (l.seed_data) e["seed_data"] = true;
    e["status"] = l.passes() ? "pass" : "fail";
    e["operator_check"] = to_json(l.op_check);
    if (l.xi_check) e["derivation_check"] = to_json(*l.xi_check);
    levels.push_back(e);
  }
  j["levels"] = levels;
  return j;
}

json to_json(const ClassificationReport& rep) {
  json j;
  j["ansatz"] = rep.ansatz;
  {
    json qs = json::array();
    for (const auto& q : rep.sample_qs) qs.push_back(q.str());
    j["sample_qs"] = qs;
  }
  {
    json cs = json::array();
    for (const auto& rc : rep.raw_constraints) {
      json e;
      e["identity"] = rc.identity;
      e["q_index"] = rc.q_index;
      e["pair"] = {rc.i, rc.j};
      e["component"] = rc.component;
      e["poly"] = rc.poly.str();
      cs.push_back(e);
    }
    j["raw_constraints"] = cs;
  }
  {
    std::vector<std::string> ps;
    for (const auto& p : rep.distinct_constraints) ps.push_back(p.str());
    j["distinct_constraints"] = ps;
  }
  {
    std::vector<std::string> ps;
    for (const auto& p : rep.generators) ps.push_back(p.str());
    j["reduced_generators"] = ps;
  }
  switch (rep.variety) {
    case ClassificationReport::VarietyKind::empty: j["solution_set"] = "empty"; break;
    case ClassificationReport::VarietyKind::plane: j["solution_set"] = "plane"; break;
    case ClassificationReport::VarietyKind::finite: j["solution_set"] = "finite"; break;
    case ClassificationReport::VarietyKind::curve: j["solution_set"] = "curve"; break;
  }
  if (!rep.parametrization.empty()) j["parametrization"] = rep.parametrization;
  {
    json pts = json::array();
    for (const auto& [a, b] : rep.solution_points) pts.push_back({a.str(), b.str()});
    j["solution_points"] = pts;
  }
  j["contains_restriction_family"] = rep.contains_canonical;
  j["restriction_family_unique"] = rep.canonical_is_unique;
  j["solutions_reverified"] = rep.solutions_reverified;
  if (rep.grid_checked) {
    j["grid_agrees"] = rep.grid_agrees;
    json pts = json::array();
    for (const auto& [a, b] : rep.grid_solutions) pts.push_back({a.str(), b.str()});
    j["grid_solutions"] = pts;
  }
  return j;
}

json document_shell(const std::string& command, const std::vector<InputStamp>& inputs) {
  json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  json ins = json::array();
  for (const auto& s : inputs) {
    json e;
    e["path"] = s.path;
    e["digest"] = s.digest;
    ins.push_back(e);
  }
  j["inputs"] = ins;
  return j;
}

}  // namespace

std::string structured_document(const std::string& command, const std::vector<InputStamp>& inputs,
                                const CheckReport& rep) {
  json j = document_shell(command, inputs);
  j["result"] = to_json(rep);
  return j.dump(2) + "\n";
}

std::string structured_document(const std::string& command, const std::vector<InputStamp>& inputs,
                                const TowerReport& rep) {
  json j = document_shell(command, inputs);
  j["result"] = to_json(rep);
  return j.dump(2) + "\n";
}

std::string structured_document(const std::string& command, const std::vector<InputStamp>& inputs,
                                const ClassificationReport& rep) {
  json j = document_shell(command, inputs);
  j["result"] = to_json(rep);
  return j.dump(2) + "\n";
}

}  // namespace lieop
