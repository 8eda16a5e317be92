#include "qcong/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qcong {

namespace {

std::string params_joined(const std::vector<long long>& params,
                          const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(params[i]);
  }
  return out;
}

std::string emit_json(const std::vector<VerificationRecord>& records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& rec : records) {
    nlohmann::ordered_json row;
    row["theorem"] = rec.theorem;
    row["params"] = rec.params;
    row["status"] = to_cstring(rec.status);
    if (rec.status == Status::fails) {
      row["remainder_digest"] = rec.remainder_digest;
    } else {
      row["remainder_digest"] = nullptr;
    }
    row["elapsed_ms"] = rec.elapsed_ms;
    arr.push_back(std::move(row));
  }
  return arr.dump(2) + "\n";
}

std::string emit_csv(const std::vector<VerificationRecord>& records) {
  std::string out = "theorem,params,status,remainder_digest,elapsed_ms\n";
  for (const auto& rec : records) {
    out += rec.theorem;
    out += ',';
    out += params_joined(rec.params, ";");
    out += ',';
    out += to_cstring(rec.status);
    out += ',';
    if (rec.status == Status::fails) out += rec.remainder_digest;
    out += ',';
    out += std::to_string(rec.elapsed_ms);
    out += '\n';
  }
  return out;
}

std::string emit_text(const std::vector<VerificationRecord>& records) {
  std::ostringstream os;
  std::size_t holds = 0, fails = 0, skipped = 0;
  os << std::left << std::setw(14) << "theorem" << std::setw(16) << "params"
     << std::setw(9) << "status" << std::right << std::setw(11) << "elapsed_ms"
     << "\n";
  for (const auto& rec : records) {
    os << std::left << std::setw(14) << rec.theorem << std::setw(16)
       << params_joined(rec.params, ",") << std::setw(9)
       << to_cstring(rec.status) << std::right << std::setw(11)
       << rec.elapsed_ms;
    if (rec.status == Status::fails) {
      os << "  " << rec.remainder_digest;
      ++fails;
    } else if (rec.status == Status::skipped) {
      ++skipped;
    } else {
      ++holds;
    }
    os << "\n";
  }
  os << holds << " holds / " << fails << " fails / " << skipped
     << " skipped\n";
  return os.str();
}

}  // namespace

ReportFormat parse_format(const std::string& name) {
  if (name == "text") return ReportFormat::text;
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown report format: " + name);
}

std::string emit_report(const std::vector<VerificationRecord>& records,
                        ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return emit_json(records);
    case ReportFormat::csv:
      return emit_csv(records);
    default:
      return emit_text(records);
  }
}

}  // namespace qcong
