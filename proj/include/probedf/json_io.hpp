#pragma once

#include <string>

#include "json.hpp"
#include "probedf/recognize.hpp"

namespace probedf {

/// Fixed field order so certificates can be diffed byte for byte:
/// negative {"result","indicator","name","vertices"},
/// positive {"result","probes","nonprobes","completion"}.
nlohmann::ordered_json certificate_to_json(const Certificate& cert);

enum class CertCheck { accept, reject, malformed };

/// Validates a parsed certificate document against the graph. malformed
/// covers schema violations; reject covers well-formed certificates the
/// verifiers refuse. reason, when given, receives a short explanation.
CertCheck check_certificate(const Graph& g, const nlohmann::json& doc,
                            std::string* reason = nullptr);

}  // namespace probedf
