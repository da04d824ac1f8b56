#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace umbilic {

struct Check {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
  nlohmann::json data;
};

// Suites: indices, regularity, duality, ribaucour, all.
std::vector<Check> run_suite(const std::string& suite);
const std::vector<std::string>& suite_names();

}  // namespace umbilic
