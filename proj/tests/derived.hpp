#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

// Values frozen by tests/oracles/derive.py.
inline const nlohmann::json& derived() {
  static const nlohmann::json j = [] {
    std::ifstream in(std::string(TBRANCH_TEST_DATA) + "/derived.json");
    return nlohmann::json::parse(in);
  }();
  return j;
}
