#pragma once

#include <stdexcept>
#include <string>

#include "luckgrid/model.hpp"

namespace luckgrid {

/// Parse or validation failure; what() carries the 1-based line number.
struct ConfigError : std::runtime_error {
    ConfigError(int line_no, const std::string& message);
    int line = 0;
};

/// Flat `key = value` text, one pair per line, `#` starts a comment.
/// Keys are the SimParams field names; keys not mentioned keep their
/// defaults. Unknown keys, malformed lines and out-of-range values all
/// throw ConfigError.
SimParams parse_config(const std::string& text);

/// parse_config over a file's contents; failures mention the path.
SimParams load_config(const std::string& path);

/// Canonical config text; parse_config(serialize_config(p)) == p.
std::string serialize_config(const SimParams& params);

} // namespace luckgrid
