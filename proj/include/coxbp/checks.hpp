#pragma once

#include <coxbp/exec.hpp>
#include <coxbp/io.hpp>

#include <string>
#include <vector>

namespace coxbp {

struct CheckContext {
  unsigned seed = 20240601;
  Exec exec = Exec::parallel;
};

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);

struct CheckInfo {
  std::string name;
  int criterion = 0;
  bool long_run = false;
  std::string summary;
};

struct CheckResult {
  CheckInfo info;
  CheckStatus status = CheckStatus::fail;
  std::vector<std::string> notes;
  double seconds = 0;
  Json data = Json::object();
};

const std::vector<CheckInfo>& check_catalog();
const CheckInfo* find_check(const std::string& name);
CheckResult run_check(const std::string& name, const CheckContext& ctx);
// Default checks plus the named long runs ("all" selects every long run).
std::vector<std::string> select_checks(const std::vector<std::string>& include_long);

Json to_json(const CheckResult& r);

} // namespace coxbp
