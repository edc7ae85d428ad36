#pragma once

#include "symfano/fan.hpp"

#include <optional>
#include <string>

namespace symfano {

/// File form of a fan: a JSON object with the fields `dim`, `generators`,
/// `max_cones` (0-based) and an optional `name`.
struct FanDocument {
    Fan fan;
    std::optional<std::string> name;
};

/// Throws MalformedInput with the line or field at fault.
FanDocument parse_document(const std::string& text);

/// Deterministic output. Integers outside 64 bits are written as strings.
std::string print_document(const FanDocument& doc);

} // namespace symfano
