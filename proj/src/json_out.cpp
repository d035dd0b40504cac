#include "hallverdict/json_out.hpp"

#include <nlohmann/json.hpp>

namespace hallverdict::json_out {

using nlohmann::json;

json trace(const conditions::ConditionTrace& t) {
  json j;
  j["condition"] = t.label();
  j["realization"] =
      t.realization ? json(t.realization->to_string()) : json(nullptr);
  j["satisfied"] = t.satisfied;
  j["fail_reason"] = t.fail_reason;
  j["bindings"] = json::object();
  for (const auto& [k, v] : t.bindings) j["bindings"][k] = v;
  j["flags"] = t.flags;
  return j;
}

json verdict(const classifier::Verdict& v, const classifier::ClassSpec& X) {
  json j;
  j["schema"] = 1;
  j["verdict"] = v.answer;
  j["class"] = {{"pi", X.pi.to_string()}, {"rule", classifier::rule_name(X.rule)}};
  j["factors"] = json::array();
  for (const auto& f : v.per_factor) {
    json jf;
    jf["id"] = groups::format_group(f.factor);
    jf["canonical"] = groups::format_group(f.canonical);
    jf["status"] = classifier::status_name(f.status);
    const auto* w = f.witness_trace();
    jf["witness_condition"] = w ? json(w->label()) : json(nullptr);
    jf["bindings"] = json::object();
    if (w)
      for (const auto& [k, val] : w->bindings) jf["bindings"][k] = val;
    jf["notes"] = f.notes;
    jf["traces"] = json::array();
    for (const auto& t : f.traces) jf["traces"].push_back(trace(t));
    j["factors"].push_back(std::move(jf));
  }
  return j;
}

json hall_records(const std::vector<catalog::HallRecord>& records) {
  json j;
  j["schema"] = 1;
  j["records"] = json::array();
  for (const auto& r : records) {
    json jr;
    jr["group"] = r.group.to_string();
    json pi = json::array();
    for (const auto& p : r.pi_intersection) pi.push_back(p.str());
    jr["pi"] = std::move(pi);
    jr["structure"] = r.structure;
    jr["notes"] = r.conjugacy_note;
    j["records"].push_back(std::move(jr));
  }
  return j;
}

json maximal_classes(const std::vector<oracle::MaximalClass>& classes) {
  json j = json::array();
  for (const auto& c : classes)
    j.push_back({{"order", c.order}, {"count", c.members.size()}});
  return j;
}

json factor_list(const std::vector<groups::SimpleGroupId>& factors) {
  json j = json::array();
  for (const auto& f : factors) j.push_back(groups::format_group(f));
  return j;
}

}  // namespace hallverdict::json_out
