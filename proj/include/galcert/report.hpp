#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "galcert/certifier.hpp"

namespace galcert {

/// Summary sentence for the verdict.
std::string conclusion(const Certificate& cert);

/// Human-readable report. Every fact in the JSON form appears here as a
/// "key: value" line.
std::string to_text(const Certificate& cert);

nlohmann::json to_json(const Certificate& cert);

/// Pretty-printed JSON with sorted keys, newline terminated. A single
/// certificate is an object; several are an array.
std::string to_json_text(const std::vector<Certificate>& certs);

}  // namespace galcert
