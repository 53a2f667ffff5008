#include "culturesim/config_file.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace culturesim {

namespace {

std::string_view trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) {
    return {};
  }
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail_line(int line, const std::string& message) {
  throw std::invalid_argument("config line " + std::to_string(line) + ": " + message);
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  RunConfig config;
  std::set<std::string, std::less<>> seen;

  int line_number = 0;
  while (!text.empty()) {
    ++line_number;
    const auto newline = text.find('\n');
    std::string_view line = text.substr(0, newline);
    text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);

    if (const auto comment = line.find('#'); comment != std::string_view::npos) {
      line = line.substr(0, comment);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }

    const auto equals = line.find('=');
    if (equals == std::string_view::npos) {
      fail_line(line_number, "malformed line, expected `key = value`");
    }
    const std::string_view key = trim(line.substr(0, equals));
    const std::string_view value = trim(line.substr(equals + 1));
    if (key.empty()) {
      fail_line(line_number, "malformed line, missing key before `=`");
    }
    if (value.empty()) {
      fail_line(line_number, "malformed line, missing value after `=`");
    }
    if (!seen.insert(std::string(key)).second) {
      fail_line(line_number, "duplicate key '" + std::string(key) + "'");
    }
    try {
      apply_field(config, key, value);
    } catch (const std::invalid_argument& error) {
      fail_line(line_number, error.what());
    }
  }

  validate(config);
  return config;
}

std::vector<SweepAxis> parse_axes(std::string_view spec) {
  std::vector<SweepAxis> axes;
  std::set<std::string, std::less<>> seen;

  while (!spec.empty()) {
    const auto semicolon = spec.find(';');
    const std::string_view part = trim(spec.substr(0, semicolon));
    spec = semicolon == std::string_view::npos ? std::string_view{} : spec.substr(semicolon + 1);
    if (part.empty()) {
      throw std::invalid_argument("axes: empty axis specification");
    }

    const auto equals = part.find('=');
    if (equals == std::string_view::npos) {
      throw std::invalid_argument("axes: expected `key=v1,v2,...` in '" + std::string(part) + "'");
    }
    SweepAxis axis;
    axis.key = std::string(trim(part.substr(0, equals)));
    if (axis.key == "seed") {
      throw std::invalid_argument("axes: 'seed' cannot be swept; seeds come from seed0");
    }
    const auto& keys = config_keys();
    if (std::find(keys.begin(), keys.end(), axis.key) == keys.end()) {
      throw std::invalid_argument("axes: unknown key '" + axis.key + "'");
    }
    if (!seen.insert(axis.key).second) {
      throw std::invalid_argument("axes: duplicate key '" + axis.key + "'");
    }

    std::string_view values = part.substr(equals + 1);
    while (true) {
      const auto comma = values.find(',');
      const std::string_view value = trim(values.substr(0, comma));
      if (value.empty()) {
        throw std::invalid_argument("axes: empty value for key '" + axis.key + "'");
      }
      // Validate eagerly so errors name the axes spec, not sweep internals.
      RunConfig probe;
      try {
        apply_field(probe, axis.key, value);
      } catch (const std::invalid_argument& error) {
        throw std::invalid_argument("axes: " + std::string(error.what()));
      }
      axis.values.emplace_back(value);
      if (comma == std::string_view::npos) {
        break;
      }
      values = values.substr(comma + 1);
    }
    axes.push_back(std::move(axis));
  }

  if (axes.empty()) {
    throw std::invalid_argument("axes: specification is empty");
  }
  return axes;
}

}  // namespace culturesim
