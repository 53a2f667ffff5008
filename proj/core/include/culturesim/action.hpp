#ifndef CULTURESIM_ACTION_HPP
#define CULTURESIM_ACTION_HPP

#include <array>
#include <cstdint>

namespace culturesim {

// Body-part component indices of an action vector.
inline constexpr int kHead = 0;
inline constexpr int kLeftArm = 1;
inline constexpr int kRightArm = 2;
inline constexpr int kLeftLeg = 3;
inline constexpr int kRightLeg = 4;
inline constexpr int kHips = 5;

inline constexpr int kComponents = 6;
inline constexpr int kActionSpaceSize = 729;  // 3^6
inline constexpr double kMaxFitness = 10.0;

// A movement pattern: one ternary value per body part.
// -1 = moving down, 0 = still, +1 = moving up.
struct ActionVector {
  std::array<int8_t, kComponents> v{};

  // The designated minimum-fitness action: standing still doing nothing.
  static ActionVector still() { return ActionVector{}; }

  int8_t operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
  int8_t& operator[](int i) { return v[static_cast<std::size_t>(i)]; }

  bool operator==(const ActionVector&) const = default;
};

// Scores an action: one point per moving body part, plus a bonus of two for
// each limb pair (arms, legs) moving anti-symmetrically. Pure, range [0, 10];
// the still action scores 0 and the maximum 10 is attained by 16 actions.
double fitness(const ActionVector& action);

// Packs an action into a base-3 code in [0, 729); head is the most
// significant digit. decode(encode(a)) == a.
int encode(const ActionVector& action);
ActionVector decode(int code);

}  // namespace culturesim

#endif  // CULTURESIM_ACTION_HPP
