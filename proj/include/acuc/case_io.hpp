#pragma once

#include <string>

#include "acuc/network.hpp"

namespace acuc {

/// Parses MATPOWER-style case text (bus/gen/branch/gencost matrices) into a
/// validated per-unit Network. Out-of-service branches and generators are
/// dropped; unknown columns are ignored.
Network parse_case(const std::string& text);

/// Canonical network serialization (JSON document with base_mva and
/// bus/branch/generator arrays). Numbers round-trip exactly.
std::string serialize_network(const Network& net);
Network parse_network_json(const std::string& text);

}  // namespace acuc
