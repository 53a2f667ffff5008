#include "culturesim/run_config.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace culturesim {

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument(message);
}

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    fail("value " + quoted(text) + " for key " + quoted(key) + " is not a valid number");
  }
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  fail("value " + quoted(text) + " for key " + quoted(key) +
       " is not a boolean (use true/false or 1/0)");
}

void check_range(bool ok, std::string_view key, std::string_view requirement,
                 std::string_view value) {
  if (!ok) {
    fail("key " + quoted(key) + ": value " + std::string(value) + " out of range, must be " +
         std::string(requirement));
  }
}

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.width < 1 || c.height < 1) {
    fail("grid dimensions must be positive, got " + std::to_string(c.width) + "x" +
         std::to_string(c.height));
  }
  if (c.width * c.height < 4) {
    fail("grid must hold at least 4 agents, got " + std::to_string(c.width * c.height));
  }
  if (c.iterations < 1) {
    fail("iterations must be >= 1, got " + std::to_string(c.iterations));
  }
  if (!(c.leader_p_invent >= 0.0 && c.leader_p_invent <= 1.0)) {
    fail("leader_p_invent must be in [0,1], got " + format_real(c.leader_p_invent));
  }
  if (!(c.follower_p_invent >= 0.0 && c.follower_p_invent <= 1.0)) {
    fail("follower_p_invent must be in [0,1], got " + format_real(c.follower_p_invent));
  }
  if (!(c.leader_r_change > 0.0 && c.leader_r_change <= 1.0)) {
    fail("leader_r_change must be in (0,1], got " + format_real(c.leader_r_change));
  }
  if (!(c.follower_r_change > 0.0 && c.follower_r_change <= 1.0)) {
    fail("follower_r_change must be in (0,1], got " + format_real(c.follower_r_change));
  }
  if (!(c.alpha > 0.0 && c.alpha <= 1.0)) {
    fail("alpha must be in (0,1], got " + format_real(c.alpha));
  }
  if (!(c.epsilon > 0.0)) {
    fail("epsilon must be > 0, got " + format_real(c.epsilon));
  }
}

void apply_field(RunConfig& c, std::string_view key, std::string_view value) {
  if (key == "width") {
    c.width = parse_number<int>(key, value);
    check_range(c.width >= 1, key, ">= 1", value);
  } else if (key == "height") {
    c.height = parse_number<int>(key, value);
    check_range(c.height >= 1, key, ">= 1", value);
  } else if (key == "iterations") {
    c.iterations = parse_number<int>(key, value);
    check_range(c.iterations >= 1, key, ">= 1", value);
  } else if (key == "broadcast_enabled") {
    c.broadcast_enabled = parse_bool(key, value);
  } else if (key == "leader_p_invent") {
    c.leader_p_invent = parse_number<double>(key, value);
    check_range(c.leader_p_invent >= 0.0 && c.leader_p_invent <= 1.0, key, "in [0,1]", value);
  } else if (key == "follower_p_invent") {
    c.follower_p_invent = parse_number<double>(key, value);
    check_range(c.follower_p_invent >= 0.0 && c.follower_p_invent <= 1.0, key, "in [0,1]", value);
  } else if (key == "leader_r_change") {
    c.leader_r_change = parse_number<double>(key, value);
    check_range(c.leader_r_change > 0.0 && c.leader_r_change <= 1.0, key, "in (0,1]", value);
  } else if (key == "follower_r_change") {
    c.follower_r_change = parse_number<double>(key, value);
    check_range(c.follower_r_change > 0.0 && c.follower_r_change <= 1.0, key, "in (0,1]", value);
  } else if (key == "alpha") {
    c.alpha = parse_number<double>(key, value);
    check_range(c.alpha > 0.0 && c.alpha <= 1.0, key, "in (0,1]", value);
  } else if (key == "epsilon") {
    c.epsilon = parse_number<double>(key, value);
    check_range(c.epsilon > 0.0, key, "> 0", value);
  } else if (key == "seed") {
    c.seed = parse_number<std::uint64_t>(key, value);
  } else {
    fail("unknown key " + quoted(key));
  }
}

std::string format_field(const RunConfig& c, std::string_view key) {
  if (key == "width") return std::to_string(c.width);
  if (key == "height") return std::to_string(c.height);
  if (key == "iterations") return std::to_string(c.iterations);
  if (key == "broadcast_enabled") return c.broadcast_enabled ? "1" : "0";
  if (key == "leader_p_invent") return format_real(c.leader_p_invent);
  if (key == "follower_p_invent") return format_real(c.follower_p_invent);
  if (key == "leader_r_change") return format_real(c.leader_r_change);
  if (key == "follower_r_change") return format_real(c.follower_r_change);
  if (key == "alpha") return format_real(c.alpha);
  if (key == "epsilon") return format_real(c.epsilon);
  if (key == "seed") return std::to_string(c.seed);
  fail("unknown key " + quoted(key));
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "width",           "height",
      "iterations",      "broadcast_enabled",
      "leader_p_invent", "follower_p_invent",
      "leader_r_change", "follower_r_change",
      "alpha",           "epsilon",
      "seed",
  };
  return keys;
}

}  // namespace culturesim
