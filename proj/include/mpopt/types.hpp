#ifndef MPOPT_TYPES_HPP_
#define MPOPT_TYPES_HPP_

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace mpopt {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Joints = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

/// TCP pose: position in mm, orientation as an angle-product (axis-angle)
/// 3-vector in rad with the canonical representative ||beta|| <= pi.
struct Pose {
  Vec3 p = Vec3::Zero();
  Vec3 beta = Vec3::Zero();
};

/// Base error type for the library. Subcommands map these to exit code 3.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input/format problems (bad files, bad configs). Exit code 2.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

/// Wraps an angle to (-pi, pi].
inline double wrap_angle(double a) {
  a = std::fmod(a + kPi, 2.0 * kPi);
  if (a <= 0.0) a += 2.0 * kPi;
  return a - kPi;
}

}  // namespace mpopt

#endif  // MPOPT_TYPES_HPP_
