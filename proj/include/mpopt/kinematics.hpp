#ifndef MPOPT_KINEMATICS_HPP_
#define MPOPT_KINEMATICS_HPP_

#include <array>
#include <filesystem>
#include <optional>
#include <vector>

#include "mpopt/types.hpp"

namespace mpopt::kin {

/// Configuration-dependent acceleration limits for joints 1-3, stored on a
/// regular (q2, q3) grid and interpolated bilinearly.
struct AccelTable {
  Eigen::VectorXd q2_grid;  // strictly increasing, rad
  Eigen::VectorXd q3_grid;  // strictly increasing, rad
  std::array<Eigen::MatrixXd, 3> limits;  // limits[j](i2, i3), rad/s^2

  /// Bilinear interpolation. Queries outside the grid are clamped to the
  /// boundary; `clamped`, when given, is set accordingly.
  Vec3 lookup(double q2, double q3, bool* clamped = nullptr) const;

  bool empty() const { return q2_grid.size() == 0; }
  void validate() const;
};

struct ToolTransform {
  Vec3 p = Vec3::Zero();  // mm, flange -> TCP
  Mat3 R = Mat3::Identity();
};

/// 6R serial arm with spherical wrist, described by its joint axes and one
/// point per axis at the zero configuration (base frame, mm).
///
/// Conventions validated at load:
///   axis 1 = +z through the base origin, axes 2,3 = +y, axis 5 = +y,
///   axes 4,6 = +x, all axis points in the y=0 plane, and axes 4,5,6
///   intersecting at a common wrist point. The flange frame is defined as
///   base-aligned at the wrist point in the zero configuration; the tool
///   transform maps that frame to the TCP.
struct RobotModel {
  std::string name;
  std::array<Vec3, 6> joint_axes;
  std::array<Vec3, 6> joint_origins;  // mm
  ToolTransform tool;
  Joints q_min, q_max;   // rad
  Joints dq_max;         // rad/s
  Vec3 ddq_wrist;        // rad/s^2, joints 4-6
  AccelTable accel_table;
  Vec3 workspace_center = Vec3::Zero();  // mm, baseline curve placement

  // Derived at load (finalize()):
  Vec3 wrist0 = Vec3::Zero();  // axes 4-6 intersection at q = 0
  double shoulder_x = 0, shoulder_z = 0;  // axis-2 point, arm plane
  double upper_len = 0;   // |o3 - o2|
  double fore_len = 0;    // |wrist0 - o3|
  double a10 = 0;         // zero-config azimuth of (o3 - o2)
  double psi0 = 0;        // zero-config azimuth of (wrist0 - o3)

  /// Validates axis conventions and the spherical-wrist assumption and
  /// computes the derived IK geometry. Throws InputError on violation.
  void finalize();

  bool within_limits(const Joints& q, double tol = 0.0) const;
  Joints clamp_to_limits(const Joints& q) const;
  Vec3 accel_limit(double q2, double q3) const;  // joints 1-3, rad/s^2

  /// Full 6-vector of acceleration limits at a configuration.
  Joints accel_limits6(const Joints& q) const;
};

RobotModel load_robot_model(const std::filesystem::path& file);
void save_robot_model(const RobotModel& m, const std::filesystem::path& file);
AccelTable load_accel_table_csv(const std::filesystem::path& file);
void save_accel_table_csv(const AccelTable& t, const std::filesystem::path& file);

/// Rodrigues map: angle-product 3-vector -> rotation matrix.
Mat3 beta_to_rotation(const Vec3& beta);

/// Log map with the canonical representative ||beta|| <= pi.
Vec3 rotation_to_beta(const Mat3& R);

/// Representative of the same rotation closest to `ref` (handles the wrap at
/// the ||beta|| = pi shell; used for continuous interpolation).
Vec3 beta_near(const Vec3& beta, const Vec3& ref);

/// Angle of the relative rotation between two orientations, rad.
double orientation_distance(const Mat3& Ra, const Mat3& Rb);

struct FwdResult {
  Vec3 p;   // TCP, mm
  Mat3 R;   // TCP orientation
  std::array<Vec3, 6> axis_dir;  // joint axes in base frame at q
  std::array<Vec3, 6> axis_pt;   // a point on each axis at q, mm
};

/// Full forward kinematics with the per-joint frames needed for Jacobians.
FwdResult fwd_full(const Joints& q, const RobotModel& m);

/// Forward kinematic map q -> TCP pose.
Pose fwd(const Joints& q, const RobotModel& m);

/// Tool z-axis in the base frame (third column of the TCP rotation).
Vec3 ez(const Joints& q, const RobotModel& m);

/// Geometric Jacobian, [w; v] = J(q) qdot. Top rows angular (rad/s), bottom
/// rows linear (mm/s), base frame.
Mat6 jacobian(const Joints& q, const RobotModel& m);

/// Yoshikawa manipulability sqrt(det(J J^T)) = |det J|.
double manipulability(const Joints& q, const RobotModel& m);

struct InvOptions {
  bool keep_out_of_limits = false;
  std::optional<double> prev_q4;  // wrist-singularity convention
};

/// Closed-form IK (position -> joints 1-3, orientation -> joints 4-6).
/// Returns up to 8 deduplicated branches, lexicographically sorted; empty if
/// the pose is unreachable. Out-of-limit branches are filtered unless
/// opts.keep_out_of_limits.
std::vector<Joints> inv(const Pose& pose, const RobotModel& m,
                        const InvOptions& opts = {});

/// In-limit IK branch nearest (2-norm) to q_ref; nullopt if none.
std::optional<Joints> inv_nearest(const Pose& pose, const Joints& q_ref,
                                  const RobotModel& m);

}  // namespace mpopt::kin

#endif  // MPOPT_KINEMATICS_HPP_
