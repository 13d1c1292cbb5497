#include "flab/report.hpp"

#include <stdexcept>

#include "flab/errors.hpp"

namespace flab {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Violation: return "violation";
    case Status::Inapplicable: return "inapplicable";
    case Status::CapacityError: return "capacity-error";
    case Status::InputError: return "input-error";
  }
  return "unknown";
}

Status status_from_string(const std::string& s) {
  for (Status st : {Status::Pass, Status::Violation, Status::Inapplicable, Status::CapacityError, Status::InputError}) {
    if (to_string(st) == s) return st;
  }
  throw InputError("unknown status '" + s + "'");
}

namespace {

bool reserved(const std::string& key) {
  return key == "check" || key == "status" || key == "reason" || key == "witness" || key == "seconds";
}

}  // namespace

Json VerificationReport::to_json(bool with_timing) const {
  Json j = Json::object();
  for (const auto& [key, value] : details.items()) {
    if (reserved(key)) throw std::logic_error("detail key '" + key + "' clashes with a report field");
    j[key] = value;
  }
  j["check"] = check;
  j["status"] = to_string(status);
  if (!reason.empty()) j["reason"] = reason;
  if (!witness.is_null()) j["witness"] = witness;
  if (with_timing) j["seconds"] = seconds;
  return j;
}

VerificationReport VerificationReport::from_json(const Json& j) {
  if (!j.is_object()) throw InputError("report must be a JSON object");
  VerificationReport r;
  r.check = j.at("check").get<std::string>();
  r.status = status_from_string(j.at("status").get<std::string>());
  for (const auto& [key, value] : j.items()) {
    if (key == "reason") r.reason = value.get<std::string>();
    else if (key == "witness") r.witness = value;
    else if (key == "seconds") r.seconds = value.get<double>();
    else if (!reserved(key)) r.details[key] = value;
  }
  return r;
}

VerificationReport pass_report(std::string check, Json details) {
  VerificationReport r;
  r.check = std::move(check);
  r.details = std::move(details);
  return r;
}

VerificationReport violation_report(std::string check, std::string reason, Json witness, Json details) {
  VerificationReport r;
  r.check = std::move(check);
  r.status = Status::Violation;
  r.reason = std::move(reason);
  r.witness = std::move(witness);
  r.details = std::move(details);
  return r;
}

VerificationReport inapplicable_report(std::string check, std::string reason, Json details) {
  VerificationReport r;
  r.check = std::move(check);
  r.status = Status::Inapplicable;
  r.reason = std::move(reason);
  r.details = std::move(details);
  return r;
}

}  // namespace flab
