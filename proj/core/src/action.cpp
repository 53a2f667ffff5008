#include "culturesim/action.hpp"

namespace culturesim {

double fitness(const ActionVector& a) {
  int score = 0;
  for (int i = 0; i < kComponents; ++i) {
    if (a[i] != 0) {
      ++score;
    }
  }
  if (a[kLeftArm] != 0 && a[kLeftArm] == -a[kRightArm]) {
    score += 2;
  }
  if (a[kLeftLeg] != 0 && a[kLeftLeg] == -a[kRightLeg]) {
    score += 2;
  }
  return static_cast<double>(score);
}

int encode(const ActionVector& a) {
  int code = 0;
  for (int i = 0; i < kComponents; ++i) {
    code = code * 3 + (a[i] + 1);
  }
  return code;
}

ActionVector decode(int code) {
  ActionVector a;
  for (int i = kComponents - 1; i >= 0; --i) {
    a[i] = static_cast<int8_t>(code % 3 - 1);
    code /= 3;
  }
  return a;
}

}  // namespace culturesim
