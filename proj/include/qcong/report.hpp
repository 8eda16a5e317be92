// Serializes verification records as text, JSON, or CSV.
#pragma once

#include <string>
#include <vector>

#include "qcong/congruence.hpp"

namespace qcong {

enum class ReportFormat { text, json, csv };

// Returns the format for "text" / "json" / "csv", or throws invalid_argument.
ReportFormat parse_format(const std::string& name);

std::string emit_report(const std::vector<VerificationRecord>& records,
                        ReportFormat format);

}  // namespace qcong
