#include <algorithm>

#include "rootpoly/oracle.hpp"

namespace rootpoly::oracle {

void Report::add(std::string check, std::string input, bool pass, std::string witness) {
  records_.push_back({std::move(check), std::move(input), pass, std::move(witness)});
}

void Report::add(const ProbeReport& probe, const std::string& input) {
  if (probe.pass()) {
    add(probe.check, input, true, std::to_string(probe.trials) + " trials");
    return;
  }
  for (const Finding& f : probe.failures) add(probe.check, f.input.empty() ? input : f.input, false, f.witness);
}

bool Report::all_pass() const {
  return std::all_of(records_.begin(), records_.end(), [](const CheckRecord& r) { return r.pass; });
}

nlohmann::json Report::json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : records_)
    checks.push_back({{"check", r.check}, {"input", r.input}, {"pass", r.pass}, {"witness", r.witness}});
  return {{"pass", all_pass()}, {"checks", checks}};
}

std::string Report::text() const {
  std::string out;
  std::size_t failed = 0;
  for (const auto& r : records_) {
    out += (r.pass ? "PASS " : "FAIL ") + r.check + " " + r.input;
    if (!r.witness.empty()) out += " : " + r.witness;
    out += "\n";
    failed += !r.pass;
  }
  out += std::to_string(records_.size() - failed) + "/" + std::to_string(records_.size()) + " checks passed\n";
  return out;
}

}  // namespace rootpoly::oracle
