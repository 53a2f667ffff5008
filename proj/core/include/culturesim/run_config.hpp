#ifndef CULTURESIM_RUN_CONFIG_HPP
#define CULTURESIM_RUN_CONFIG_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace culturesim {

// All parameters of one simulation run. The default society innovates
// rarely (one expected invention per iteration across 100 agents); that is
// slow enough for a broadcasting leader's action to take over the grid
// within the default 100 iterations. Experiment presets pin their own rates.
struct RunConfig {
  int width = 10;
  int height = 10;
  int iterations = 100;
  bool broadcast_enabled = false;
  double leader_p_invent = 0.01;
  double follower_p_invent = 0.01;
  double leader_r_change = 1.0 / 3.0;
  double follower_r_change = 1.0 / 3.0;
  double alpha = 0.1;    // knowledge learning rate, in (0, 1]
  double epsilon = 0.1;  // smoothing added to knowledge weights when inventing, > 0
  std::uint64_t seed = 0;

  bool operator==(const RunConfig&) const = default;
};

// Throws std::invalid_argument naming the offending field.
void validate(const RunConfig& config);

// Sets one field from its textual form, with range checking. Keys are the
// field names above. Throws std::invalid_argument for unknown keys,
// unparsable values and out-of-range values.
void apply_field(RunConfig& config, std::string_view key, std::string_view value);

// Canonical textual form of one field, as used in sweep CSV cell keys:
// integers plain, booleans 0/1, reals with six decimals.
std::string format_field(const RunConfig& config, std::string_view key);

// All keys accepted by apply_field, in canonical order.
const std::vector<std::string>& config_keys();

}  // namespace culturesim

#endif  // CULTURESIM_RUN_CONFIG_HPP
