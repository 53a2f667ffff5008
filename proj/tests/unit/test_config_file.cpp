#include <functional>
#include <stdexcept>
#include <string>

#include "culturesim/config_file.hpp"
#include "doctest.h"

using namespace culturesim;

namespace {

std::string error_message(const std::function<void()>& call) {
  try {
    call();
  } catch (const std::invalid_argument& error) {
    return error.what();
  }
  return {};
}

}  // namespace

TEST_CASE("an empty document yields the defaults") {
  const RunConfig config = parse_config("");
  CHECK(config.width == 10);
  CHECK(config.height == 10);
  CHECK(config.iterations == 100);
  CHECK_FALSE(config.broadcast_enabled);
  CHECK(config == RunConfig{});
}

TEST_CASE("a full document overrides every field") {
  const RunConfig config = parse_config(
      "# experiment setup\n"
      "width = 8\n"
      "height = 6\n"
      "iterations = 100\n"
      "broadcast_enabled = true\n"
      "\n"
      "leader_p_invent = 0.25   # the leader invents often\n"
      "follower_p_invent = 0.02\n"
      "leader_r_change = 0.4\n"
      "follower_r_change = 0.5\n"
      "alpha = 0.2\n"
      "epsilon = 0.05\n"
      "seed = 18446744073709551615\n");
  CHECK(config.width == 8);
  CHECK(config.height == 6);
  CHECK(config.iterations == 100);
  CHECK(config.broadcast_enabled);
  CHECK(config.leader_p_invent == 0.25);
  CHECK(config.follower_p_invent == 0.02);
  CHECK(config.leader_r_change == 0.4);
  CHECK(config.follower_r_change == 0.5);
  CHECK(config.alpha == 0.2);
  CHECK(config.epsilon == 0.05);
  CHECK(config.seed == 18446744073709551615ull);
}

TEST_CASE("errors carry the line number and the key") {
  const std::string unknown = error_message([] { parse_config("width = 10\nfoo = 1\n"); });
  CHECK(unknown.find("line 2") != std::string::npos);
  CHECK(unknown.find("foo") != std::string::npos);

  const std::string range =
      error_message([] { parse_config("\n\nleader_p_invent = 1.5\n"); });
  CHECK(range.find("line 3") != std::string::npos);
  CHECK(range.find("leader_p_invent") != std::string::npos);

  const std::string malformed = error_message([] { parse_config("width\n"); });
  CHECK(malformed.find("line 1") != std::string::npos);
  CHECK(malformed.find("malformed") != std::string::npos);

  const std::string bad_number = error_message([] { parse_config("width = ten\n"); });
  CHECK(bad_number.find("line 1") != std::string::npos);

  const std::string duplicate =
      error_message([] { parse_config("width = 4\nwidth = 5\n"); });
  CHECK(duplicate.find("line 2") != std::string::npos);
  CHECK(duplicate.find("duplicate") != std::string::npos);
}

TEST_CASE("cross-field validation still applies") {
  CHECK_THROWS_AS(parse_config("width = 1\nheight = 3\n"), std::invalid_argument);
  CHECK_NOTHROW(parse_config("width = 2\nheight = 2\n"));
}

TEST_CASE("axes specs parse into sweep axes") {
  const auto axes = parse_axes("leader_p_invent=0,0.25,1.0; follower_p_invent = 0.02, 0.5");
  REQUIRE(axes.size() == 2);
  CHECK(axes[0].key == "leader_p_invent");
  CHECK(axes[0].values == std::vector<std::string>{"0", "0.25", "1.0"});
  CHECK(axes[1].key == "follower_p_invent");
  CHECK(axes[1].values == std::vector<std::string>{"0.02", "0.5"});
}

TEST_CASE("axes specs reject bad input") {
  CHECK_THROWS_AS(parse_axes(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_axes("nosuchkey=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_axes("width"), std::invalid_argument);
  CHECK_THROWS_AS(parse_axes("width=4,,5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_axes("seed=1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_axes("width=4;width=5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_axes("leader_p_invent=2.0"), std::invalid_argument);
}
