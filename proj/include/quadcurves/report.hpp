#pragma once

#include <string>

#include "quadcurves/curves.hpp"

namespace qc {

/// JSON object with the ClassificationReport field names; keys sorted, no
/// timestamps, so equal reports serialize to identical bytes.
std::string classification_to_json(const ClassificationReport& r, int indent = 2);
std::string classification_to_text(const ClassificationReport& r);

/// {"dims": {"j": n, ...}, "window": [lo, hi], "support": [lo, hi] | null, "total": n}
std::string module_table_to_json(const ModuleTable& t, int indent = 2);
std::string module_table_to_text(const ModuleTable& t);

std::string certificate_to_json(const ResolutionCertificate& c, int indent = 2);
std::string certificate_to_text(const ResolutionCertificate& c);

}  // namespace qc
