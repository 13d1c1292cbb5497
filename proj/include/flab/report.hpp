#pragma once

#include <string>

#include "json.hpp"

namespace flab {

using Json = nlohmann::json;

enum class Status { Pass, Violation, Inapplicable, CapacityError, InputError };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

// Outcome of one check. Every status other than pass carries a reason;
// violations also carry a witness.
struct VerificationReport {
  std::string check;
  Status status = Status::Pass;
  std::string reason;
  Json witness;  // null when absent
  Json details = Json::object();
  double seconds = 0;

  bool passed() const { return status == Status::Pass; }

  // Flat object: the detail keys sit next to check/status/reason/witness.
  // Keys come out sorted; seconds is written only when asked for.
  Json to_json(bool with_timing = false) const;
  static VerificationReport from_json(const Json& j);
};

VerificationReport pass_report(std::string check, Json details = Json::object());
VerificationReport violation_report(std::string check, std::string reason, Json witness,
                                    Json details = Json::object());
VerificationReport inapplicable_report(std::string check, std::string reason, Json details = Json::object());

}  // namespace flab
