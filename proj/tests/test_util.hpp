#ifndef MPOPT_TESTS_TEST_UTIL_HPP_
#define MPOPT_TESTS_TEST_UTIL_HPP_

#include <random>

#include "mpopt/kinematics.hpp"

#ifndef MPOPT_SOURCE_DIR
#define MPOPT_SOURCE_DIR "."
#endif

namespace mpopt::test {

inline std::filesystem::path source_dir() { return MPOPT_SOURCE_DIR; }

inline const kin::RobotModel& bundled_model() {
  static const kin::RobotModel m =
      kin::load_robot_model(source_dir() / "models/abb_irb6640_standin.json");
  return m;
}

inline Joints random_joints(std::mt19937_64& rng, const kin::RobotModel& m,
                            double margin = 0.0) {
  Joints q;
  for (int i = 0; i < 6; ++i) {
    const double lo = m.q_min[i] + margin * (m.q_max[i] - m.q_min[i]);
    const double hi = m.q_max[i] - margin * (m.q_max[i] - m.q_min[i]);
    q[i] = std::uniform_real_distribution<double>(lo, hi)(rng);
  }
  return q;
}

/// Random in-limit configuration away from the wrist singularity.
inline Joints random_regular_joints(std::mt19937_64& rng,
                                    const kin::RobotModel& m) {
  for (;;) {
    Joints q = random_joints(rng, m, 0.02);
    if (std::abs(q[4]) < 0.05) continue;
    return q;
  }
}

}  // namespace mpopt::test

#endif  // MPOPT_TESTS_TEST_UTIL_HPP_
