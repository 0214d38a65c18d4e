#pragma once

#include <string>

#include <json.hpp>

#include "ga3/action.hpp"
#include "ga3/links.hpp"

namespace ga3 {

using Json = nlohmann::ordered_json;

inline std::string status_name(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::pass:
      return "pass";
    case CheckResult::Status::fail:
      return "fail";
    default:
      return "inconclusive";
  }
}

inline Json to_json(const CheckResult& r) {
  Json j;
  j["status"] = status_name(r.status);
  if (!r.detail.empty()) {
    j[r.status == CheckResult::Status::fail ? "witness" : "reason"] = r.detail;
  }
  return j;
}

inline Json to_json(const BundleType& b) {
  return Json{{"d1", b.d1}, {"d2", b.d2}};
}

inline Json to_json(const DivisorClass& d) {
  return Json{{"xi", d.a}, {"f", d.b}};
}

inline Json to_json(const Certificate& c) {
  Json j;
  Json checks;
  checks["identity"] = to_json(c.identity);
  checks["equivariance"] = to_json(c.equivariance);
  checks["group_law"] = to_json(c.group_law);
  checks["irrelevant_locus"] = to_json(c.irrelevant_locus);
  Json stab = Json::array();
  for (const auto& [name, r] : c.boundary_stability) {
    Json e = to_json(r);
    e["component"] = name;
    stab.push_back(e);
  }
  checks["boundary_stability"] = stab;
  Json orb = to_json(c.orbit_rank_check);
  orb["rank"] = c.orbit_rank_value;
  checks["orbit_rank"] = orb;
  Json ht = to_json(c.ht_check);
  if (c.ht_values) {
    ht["a1"] = c.ht_values->first;
    ht["a2"] = c.ht_values->second;
  }
  checks["ht_coefficients"] = ht;
  j["checks"] = checks;
  j["valid"] = c.valid();
  return j;
}

inline Json to_json(const ActionCandidate& a) {
  Json j;
  j["bundle"] = to_json(a.bundle);
  Json images;
  for (int i = 0; i < kNumCoxVars; ++i)
    images[std::string(name_of(var_at(i)))] = a.images[i].str();
  j["images"] = images;
  return j;
}

inline Json to_json(const LinkStep& s) {
  Json j;
  j["kind"] = s.kind_name();
  j["source"] = to_json(s.source);
  j["target"] = to_json(s.target);
  Json center = Json::array();
  for (const Polynomial& p : s.center_ideal) center.push_back(p.str());
  j["center"] = center;
  return j;
}

inline Json to_json(const LinkPlan& p) {
  Json steps = Json::array();
  for (const LinkStep& s : p.steps) steps.push_back(to_json(s));
  return steps;
}

inline Json to_json(const SynthesisResult& r) {
  Json j;
  j["bundle"] = to_json(r.plan.target);
  j["plan"] = to_json(r.plan);
  j["action"] = to_json(r.action);
  j["certificate"] = to_json(r.certificate);
  Json classes = Json::array();
  for (const auto& [e, f] : r.boundary_classes)
    classes.push_back(Json{{"E", to_json(e)}, {"F", to_json(f)}});
  j["boundary_classes"] = classes;
  return j;
}

}  // namespace ga3
