#ifndef CULTURESIM_CONFIG_FILE_HPP
#define CULTURESIM_CONFIG_FILE_HPP

#include <string_view>
#include <vector>

#include "culturesim/experiments.hpp"
#include "culturesim/run_config.hpp"

namespace culturesim {

// Parses a flat `key = value` document, one pair per line. `#` starts a
// comment; blank lines are skipped. Unknown keys, duplicate keys, malformed
// lines and out-of-range values are rejected with the line number; missing
// keys keep their defaults. Throws std::invalid_argument.
RunConfig parse_config(std::string_view text);

// Parses a sweep axes spec of the form `key=v1,v2,v3[;key2=w1,w2]`.
// Every key must be a config key other than `seed`, and every value must be
// valid for that key. Throws std::invalid_argument.
std::vector<SweepAxis> parse_axes(std::string_view spec);

}  // namespace culturesim

#endif  // CULTURESIM_CONFIG_FILE_HPP
