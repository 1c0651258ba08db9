#pragma once

#include <qordkit/json_io.hpp>

namespace qordkit::cli {

// {"cmd": "<domain>.<op>", ...payload} -> {"status": "ok", "result": ...}
// or {"status": "error", "diagnostics": [...]}. Never throws.
json::Json execute_request(const json::Json& request);

// The request/response pair as canonical text.
std::string execute_text(const std::string& request_text);

} // namespace qordkit::cli
