#pragma once

#include <nlohmann/json_fwd.hpp>

#include "hallverdict/catalog.hpp"
#include "hallverdict/classifier.hpp"
#include "hallverdict/oracle.hpp"

// JSON rendering with a stable schema (top-level "schema": 1). nlohmann's
// default object keeps keys sorted, so serialized output is byte-deterministic
// for fixed inputs.
namespace hallverdict::json_out {

nlohmann::json trace(const conditions::ConditionTrace& t);
nlohmann::json verdict(const classifier::Verdict& v,
                       const classifier::ClassSpec& X);
nlohmann::json hall_records(const std::vector<catalog::HallRecord>& records);
nlohmann::json maximal_classes(const std::vector<oracle::MaximalClass>& classes);
nlohmann::json factor_list(const std::vector<groups::SimpleGroupId>& factors);

}  // namespace hallverdict::json_out
