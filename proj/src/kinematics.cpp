#include "mpopt/kinematics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace mpopt::kin {

using nlohmann::json;

namespace {

constexpr double kAxisTol = 1e-9;
constexpr double kWristTol = 1e-6;

Vec3 to_vec3(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3) {
    throw InputError("robot model: field '" + field + "' must be a 3-array");
  }
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

Joints to_joints(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 6) {
    throw InputError("robot model: field '" + field + "' must be a 6-array");
  }
  Joints q;
  for (int i = 0; i < 6; ++i) q[i] = j[i].get<double>();
  return q;
}

// Azimuth of a vector in the arm plane: angle from +z toward +x.
double azimuth(double x, double z) { return std::atan2(x, z); }

Mat3 rot_x(double a) {
  Mat3 R;
  const double c = std::cos(a), s = std::sin(a);
  R << 1, 0, 0, 0, c, -s, 0, s, c;
  return R;
}

Mat3 rot_y(double a) {
  Mat3 R;
  const double c = std::cos(a), s = std::sin(a);
  R << c, 0, s, 0, 1, 0, -s, 0, c;
  return R;
}

Mat3 rot_z(double a) {
  Mat3 R;
  const double c = std::cos(a), s = std::sin(a);
  R << c, -s, 0, s, c, 0, 0, 0, 1;
  return R;
}

}  // namespace

Vec3 AccelTable::lookup(double q2, double q3, bool* clamped) const {
  if (empty()) throw Error("accel table lookup on empty table");
  bool clip = false;
  auto locate = [&clip](const Eigen::VectorXd& g, double v, double& frac) {
    const int n = static_cast<int>(g.size());
    if (v <= g[0]) {
      clip = clip || v < g[0] - 1e-12;
      frac = 0.0;
      return 0;
    }
    if (v >= g[n - 1]) {
      clip = clip || v > g[n - 1] + 1e-12;
      frac = 0.0;
      return n - 1;
    }
    int lo = 0;
    while (lo + 1 < n - 1 && g[lo + 1] <= v) ++lo;
    frac = (v - g[lo]) / (g[lo + 1] - g[lo]);
    return lo;
  };
  double f2 = 0, f3 = 0;
  const int i2 = locate(q2_grid, q2, f2);
  const int i3 = locate(q3_grid, q3, f3);
  const int j2 = std::min<int>(i2 + 1, static_cast<int>(q2_grid.size()) - 1);
  const int j3 = std::min<int>(i3 + 1, static_cast<int>(q3_grid.size()) - 1);
  Vec3 out;
  for (int j = 0; j < 3; ++j) {
    const auto& L = limits[j];
    const double v00 = L(i2, i3), v01 = L(i2, j3);
    const double v10 = L(j2, i3), v11 = L(j2, j3);
    out[j] = (1 - f2) * ((1 - f3) * v00 + f3 * v01) +
             f2 * ((1 - f3) * v10 + f3 * v11);
  }
  if (clamped) *clamped = clip;
  return out;
}

void AccelTable::validate() const {
  if (q2_grid.size() < 1 || q3_grid.size() < 1) {
    throw InputError("accel table: empty grid");
  }
  auto check_increasing = [](const Eigen::VectorXd& g, const char* name) {
    for (int i = 1; i < g.size(); ++i) {
      if (g[i] <= g[i - 1]) {
        throw InputError(std::string("accel table: ") + name +
                         " grid not strictly increasing");
      }
    }
  };
  check_increasing(q2_grid, "q2");
  check_increasing(q3_grid, "q3");
  for (int j = 0; j < 3; ++j) {
    if (limits[j].rows() != q2_grid.size() ||
        limits[j].cols() != q3_grid.size()) {
      throw InputError("accel table: value grid shape mismatch");
    }
    if ((limits[j].array() <= 0.0).any()) {
      throw InputError("accel table: all entries must be > 0");
    }
  }
}

void RobotModel::finalize() {
  for (int i = 0; i < 6; ++i) {
    if (std::abs(joint_axes[i].norm() - 1.0) > 1e-6) {
      throw InputError("robot model: joint axis " + std::to_string(i + 1) +
                       " is not unit norm");
    }
    joint_axes[i].normalize();
  }
  auto expect_axis = [&](int i, const Vec3& v) {
    if ((joint_axes[i] - v).norm() > kAxisTol) {
      throw InputError("robot model: joint axis " + std::to_string(i + 1) +
                       " must equal [" + std::to_string(v.x()) + "," +
                       std::to_string(v.y()) + "," + std::to_string(v.z()) +
                       "] (canonical ortho-parallel arm)");
    }
  };
  expect_axis(0, Vec3::UnitZ());
  expect_axis(1, Vec3::UnitY());
  expect_axis(2, Vec3::UnitY());
  expect_axis(3, Vec3::UnitX());
  expect_axis(4, Vec3::UnitY());
  expect_axis(5, Vec3::UnitX());

  if (joint_origins[0].head<2>().norm() > kWristTol) {
    throw InputError("robot model: axis-1 point must lie on the base z-axis");
  }
  for (int i = 1; i < 6; ++i) {
    if (std::abs(joint_origins[i].y()) > kWristTol) {
      throw InputError("robot model: axis points must lie in the y=0 plane");
    }
  }

  // Common intersection of axes 4,5,6 (least squares over the three lines).
  Mat3 A = Mat3::Zero();
  Vec3 b = Vec3::Zero();
  for (int i = 3; i < 6; ++i) {
    const Mat3 P = Mat3::Identity() - joint_axes[i] * joint_axes[i].transpose();
    A += P;
    b += P * joint_origins[i];
  }
  wrist0 = A.ldlt().solve(b);
  for (int i = 3; i < 6; ++i) {
    const Vec3 d = wrist0 - joint_origins[i];
    const double off = (d - joint_axes[i] * joint_axes[i].dot(d)).norm();
    if (off > kWristTol) {
      throw InputError(
          "robot model: axes 4,5,6 do not intersect at a common wrist point "
          "(spherical-wrist assumption violated)");
    }
  }

  shoulder_x = joint_origins[1].x();
  shoulder_z = joint_origins[1].z();
  const Vec3 u = joint_origins[2] - joint_origins[1];
  const Vec3 v = wrist0 - joint_origins[2];
  upper_len = u.norm();
  fore_len = v.norm();
  if (upper_len < 1e-6 || fore_len < 1e-6) {
    throw InputError("robot model: degenerate link lengths");
  }
  a10 = azimuth(u.x(), u.z());
  psi0 = azimuth(v.x(), v.z());

  for (int i = 0; i < 6; ++i) {
    if (!(q_min[i] < q_max[i])) {
      throw InputError("robot model: q_min must be < q_max componentwise");
    }
    if (!(dq_max[i] > 0)) {
      throw InputError("robot model: dq_max must be positive");
    }
  }
  if ((ddq_wrist.array() <= 0).any()) {
    throw InputError("robot model: ddq_wrist must be positive");
  }
  if (!accel_table.empty()) accel_table.validate();
}

bool RobotModel::within_limits(const Joints& q, double tol) const {
  for (int i = 0; i < 6; ++i) {
    if (q[i] < q_min[i] - tol || q[i] > q_max[i] + tol) return false;
  }
  return true;
}

Joints RobotModel::clamp_to_limits(const Joints& q) const {
  Joints out;
  for (int i = 0; i < 6; ++i) out[i] = std::clamp(q[i], q_min[i], q_max[i]);
  return out;
}

Vec3 RobotModel::accel_limit(double q2, double q3) const {
  return accel_table.lookup(q2, q3);
}

Joints RobotModel::accel_limits6(const Joints& q) const {
  Joints a;
  a.head<3>() = accel_limit(q[1], q[2]);
  a.tail<3>() = ddq_wrist;
  return a;
}

Mat3 beta_to_rotation(const Vec3& beta) {
  const double angle = beta.norm();
  if (angle < 1e-14) return Mat3::Identity();
  return Eigen::AngleAxisd(angle, beta / angle).toRotationMatrix();
}

Vec3 rotation_to_beta(const Mat3& R) {
  const Eigen::AngleAxisd aa(R);
  return aa.angle() * aa.axis();
}

Vec3 beta_near(const Vec3& beta, const Vec3& ref) {
  const double angle = beta.norm();
  if (angle < 1e-12) return beta;
  const Vec3 alt = beta * ((angle - 2.0 * kPi) / angle);
  return (alt - ref).squaredNorm() < (beta - ref).squaredNorm() ? alt : beta;
}

double orientation_distance(const Mat3& Ra, const Mat3& Rb) {
  const Mat3 Rel = Ra.transpose() * Rb;
  const double c = std::clamp((Rel.trace() - 1.0) / 2.0, -1.0, 1.0);
  return std::acos(c);
}

FwdResult fwd_full(const Joints& q, const RobotModel& m) {
  FwdResult out;
  Mat3 R = Mat3::Identity();
  Vec3 p = Vec3::Zero();
  for (int i = 0; i < 6; ++i) {
    out.axis_dir[i] = R * m.joint_axes[i];
    out.axis_pt[i] = R * m.joint_origins[i] + p;
    const Mat3 Ri =
        Eigen::AngleAxisd(q[i], m.joint_axes[i]).toRotationMatrix();
    // Screw about the axis through joint_origins[i]: [Ri | oi - Ri*oi].
    p = R * (m.joint_origins[i] - Ri * m.joint_origins[i]) + p;
    R = R * Ri;
  }
  const Vec3 p_flange = R * m.wrist0 + p;
  out.R = R * m.tool.R;
  out.p = p_flange + R * m.tool.p;
  return out;
}

Pose fwd(const Joints& q, const RobotModel& m) {
  static std::atomic<bool> warned{false};
  if (!m.within_limits(q, 1e-9) && !warned.exchange(true)) {
    std::cerr << "mpopt: warning: fwd() called outside joint limits "
                 "(reported once)\n";
  }
  const FwdResult f = fwd_full(q, m);
  return Pose{f.p, rotation_to_beta(f.R)};
}

Vec3 ez(const Joints& q, const RobotModel& m) {
  return fwd_full(q, m).R.col(2);
}

Mat6 jacobian(const Joints& q, const RobotModel& m) {
  const FwdResult f = fwd_full(q, m);
  Mat6 J;
  for (int i = 0; i < 6; ++i) {
    J.block<3, 1>(0, i) = f.axis_dir[i];
    J.block<3, 1>(3, i) = f.axis_dir[i].cross(f.p - f.axis_pt[i]);
  }
  return J;
}

double manipulability(const Joints& q, const RobotModel& m) {
  return std::abs(jacobian(q, m).determinant());
}

namespace {

struct WristAngles {
  double q4, q5, q6;
};

// M = Rx(q4) Ry(q5) Rx(q6); returns one or two branches, honoring the
// prev_q4 convention at the q5 singularity.
std::vector<WristAngles> solve_wrist(const Mat3& M,
                                     const std::optional<double>& prev_q4) {
  std::vector<WristAngles> out;
  const double s5 = std::hypot(M(0, 1), M(0, 2));
  if (s5 < 1e-8) {
    const double d = std::atan2(M(2, 1), M(1, 1));
    const double q4 = prev_q4 ? wrap_angle(*prev_q4) : 0.0;
    if (M(0, 0) > 0.0) {
      out.push_back({q4, 0.0, wrap_angle(d - q4)});  // M = Rx(q4+q6)
    } else {
      out.push_back({q4, kPi, wrap_angle(q4 - d)});  // M = Rx(q4-q6) Ry(pi)
    }
    return out;
  }
  const double q5 = std::atan2(s5, M(0, 0));
  const double q4 = std::atan2(M(1, 0), -M(2, 0));
  const double q6 = std::atan2(M(0, 1), M(0, 2));
  out.push_back({q4, q5, q6});
  out.push_back({wrap_angle(q4 + kPi), -q5, wrap_angle(q6 + kPi)});
  return out;
}

}  // namespace

std::vector<Joints> inv(const Pose& pose, const RobotModel& m,
                        const InvOptions& opts) {
  const Mat3 R_t = beta_to_rotation(pose.beta);
  const Mat3 R_f = R_t * m.tool.R.transpose();
  const Vec3 w = pose.p - R_f * m.tool.p;  // wrist center = flange origin

  std::vector<Joints> solutions;
  const double r_full = std::hypot(w.x(), w.y());
  const double base_q1 = std::atan2(w.y(), w.x());

  for (int shoulder = 0; shoulder < 2; ++shoulder) {
    const double q1 =
        shoulder == 0 ? base_q1 : wrap_angle(base_q1 + kPi);
    const double r = shoulder == 0 ? r_full : -r_full;
    const double px = r - m.shoulder_x;
    const double pz = w.z() - m.shoulder_z;
    const double D = std::hypot(px, pz);
    if (D < 1e-9) continue;  // wrist at the shoulder: degenerate
    double cb = (m.upper_len * m.upper_len + D * D - m.fore_len * m.fore_len) /
                (2.0 * m.upper_len * D);
    if (cb > 1.0 + 1e-9 || cb < -1.0 - 1e-9) continue;  // out of reach
    cb = std::clamp(cb, -1.0, 1.0);
    const double beta_ang = std::acos(cb);
    const double aT = azimuth(px, pz);

    for (int elbow = 0; elbow < 2; ++elbow) {
      const double sgn = elbow == 0 ? 1.0 : -1.0;
      const double q2 = wrap_angle(aT - sgn * beta_ang - m.a10);
      const double az1 = m.a10 + q2;
      const double ex = m.shoulder_x + m.upper_len * std::sin(az1);
      const double ez_ = m.shoulder_z + m.upper_len * std::cos(az1);
      const double aB = azimuth(px + m.shoulder_x - ex, w.z() - ez_);
      const double q3 = wrap_angle(aB - m.psi0 - q2);

      const Mat3 R03 = rot_z(q1) * rot_y(q2 + q3);
      const Mat3 M = R03.transpose() * R_f;
      for (const WristAngles& wa : solve_wrist(M, opts.prev_q4)) {
        Joints q;
        q << q1, q2, q3, wa.q4, wa.q5, wa.q6;
        solutions.push_back(q);
      }
    }
  }

  // Verify, filter, dedup.
  std::vector<Joints> out;
  for (const Joints& q : solutions) {
    const FwdResult f = fwd_full(q, m);
    if ((f.p - pose.p).norm() > 1e-6) continue;
    if (orientation_distance(f.R, beta_to_rotation(pose.beta)) > 1e-8) {
      continue;
    }
    if (!opts.keep_out_of_limits && !m.within_limits(q)) continue;
    bool dup = false;
    for (const Joints& s : out) {
      if ((s - q).cwiseAbs().maxCoeff() < 1e-9) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(q);
  }
  std::sort(out.begin(), out.end(), [](const Joints& a, const Joints& b) {
    for (int i = 0; i < 6; ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  });
  return out;
}

std::optional<Joints> inv_nearest(const Pose& pose, const Joints& q_ref,
                                  const RobotModel& m) {
  InvOptions opts;
  opts.prev_q4 = q_ref[3];
  const auto sols = inv(pose, m, opts);
  if (sols.empty()) return std::nullopt;
  const Joints* best = nullptr;
  double best_d = std::numeric_limits<double>::infinity();
  for (const Joints& s : sols) {
    const double d = (s - q_ref).norm();
    if (d < best_d) {
      best_d = d;
      best = &s;
    }
  }
  return *best;
}

// ---------------------------------------------------------------------------
// Model file I/O
// ---------------------------------------------------------------------------

AccelTable load_accel_table_csv(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open accel table CSV: " + file.string());
  std::string line;
  if (!std::getline(in, line)) {
    throw InputError("accel table CSV is empty: " + file.string());
  }
  const std::string expect = "q2_rad,q3_rad,ddq1_rad_s2,ddq2_rad_s2,ddq3_rad_s2";
  if (line.find(expect) != 0) {
    throw InputError("accel table CSV: bad header, expected '" + expect + "'");
  }
  std::vector<double> q2s, q3s;
  struct Row {
    double q2, q3, a1, a2, a3;
  };
  std::vector<Row> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    Row r{};
    char c;
    if (!(ss >> r.q2 >> c >> r.q3 >> c >> r.a1 >> c >> r.a2 >> c >> r.a3)) {
      throw InputError("accel table CSV: parse error at line " +
                       std::to_string(lineno));
    }
    rows.push_back(r);
    if (q2s.empty() || std::abs(q2s.back() - r.q2) > 1e-12) {
      if (std::find_if(q2s.begin(), q2s.end(), [&](double v) {
            return std::abs(v - r.q2) < 1e-12;
          }) == q2s.end()) {
        q2s.push_back(r.q2);
      }
    }
    if (std::find_if(q3s.begin(), q3s.end(), [&](double v) {
          return std::abs(v - r.q3) < 1e-12;
        }) == q3s.end()) {
      q3s.push_back(r.q3);
    }
  }
  std::sort(q2s.begin(), q2s.end());
  std::sort(q3s.begin(), q3s.end());
  AccelTable t;
  t.q2_grid = Eigen::Map<Eigen::VectorXd>(q2s.data(), q2s.size());
  t.q3_grid = Eigen::Map<Eigen::VectorXd>(q3s.data(), q3s.size());
  for (auto& L : t.limits) {
    L.setConstant(q2s.size(), q3s.size(),
                  std::numeric_limits<double>::quiet_NaN());
  }
  auto index_of = [](const std::vector<double>& g, double v) {
    for (size_t i = 0; i < g.size(); ++i) {
      if (std::abs(g[i] - v) < 1e-12) return static_cast<int>(i);
    }
    return -1;
  };
  for (const Row& r : rows) {
    const int i2 = index_of(q2s, r.q2);
    const int i3 = index_of(q3s, r.q3);
    t.limits[0](i2, i3) = r.a1;
    t.limits[1](i2, i3) = r.a2;
    t.limits[2](i2, i3) = r.a3;
  }
  for (const auto& L : t.limits) {
    if (L.hasNaN()) {
      throw InputError("accel table CSV: grid is not complete/regular");
    }
  }
  t.validate();
  return t;
}

void save_accel_table_csv(const AccelTable& t,
                          const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw InputError("cannot write accel table CSV: " + file.string());
  out.precision(12);
  out << "q2_rad,q3_rad,ddq1_rad_s2,ddq2_rad_s2,ddq3_rad_s2\n";
  for (int i = 0; i < t.q2_grid.size(); ++i) {
    for (int j = 0; j < t.q3_grid.size(); ++j) {
      out << t.q2_grid[i] << ',' << t.q3_grid[j] << ',' << t.limits[0](i, j)
          << ',' << t.limits[1](i, j) << ',' << t.limits[2](i, j) << '\n';
    }
  }
}

RobotModel load_robot_model(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open robot model: " + file.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("robot model " + file.string() + ": " + e.what());
  }
  RobotModel m;
  try {
    m.name = j.value("name", file.stem().string());
    const auto& axes = j.at("joint_axes");
    const auto& origins = j.at("joint_origins_mm");
    if (axes.size() != 6 || origins.size() != 6) {
      throw InputError("robot model: need 6 joint axes and 6 origins");
    }
    for (int i = 0; i < 6; ++i) {
      m.joint_axes[i] = to_vec3(axes[i], "joint_axes");
      m.joint_origins[i] = to_vec3(origins[i], "joint_origins_mm");
    }
    m.tool.p = to_vec3(j.at("tool_translation_mm"), "tool_translation_mm");
    m.tool.R = beta_to_rotation(
        to_vec3(j.at("tool_rotation_beta_rad"), "tool_rotation_beta_rad"));
    m.q_min = to_joints(j.at("q_min_rad"), "q_min_rad");
    m.q_max = to_joints(j.at("q_max_rad"), "q_max_rad");
    m.dq_max = to_joints(j.at("dq_max_rad_s"), "dq_max_rad_s");
    m.ddq_wrist = to_vec3(j.at("ddq_wrist_rad_s2"), "ddq_wrist_rad_s2");
    if (j.contains("workspace_center_mm")) {
      m.workspace_center =
          to_vec3(j.at("workspace_center_mm"), "workspace_center_mm");
    }
    if (j.contains("accel_table_csv")) {
      const std::filesystem::path p = j.at("accel_table_csv").get<std::string>();
      m.accel_table = load_accel_table_csv(
          p.is_absolute() ? p : file.parent_path() / p);
    } else if (j.contains("accel_table")) {
      const auto& at = j.at("accel_table");
      const auto g2 = at.at("q2_grid_rad").get<std::vector<double>>();
      const auto g3 = at.at("q3_grid_rad").get<std::vector<double>>();
      AccelTable t;
      t.q2_grid = Eigen::Map<const Eigen::VectorXd>(g2.data(), g2.size());
      t.q3_grid = Eigen::Map<const Eigen::VectorXd>(g3.data(), g3.size());
      const char* keys[3] = {"ddq1_rad_s2", "ddq2_rad_s2", "ddq3_rad_s2"};
      for (int k = 0; k < 3; ++k) {
        const auto& rows = at.at(keys[k]);
        t.limits[k].resize(g2.size(), g3.size());
        for (size_t i = 0; i < g2.size(); ++i) {
          for (size_t jj = 0; jj < g3.size(); ++jj) {
            t.limits[k](i, jj) = rows[i][jj].get<double>();
          }
        }
      }
      m.accel_table = std::move(t);
    } else {
      throw InputError(
          "robot model: need 'accel_table_csv' or inline 'accel_table'");
    }
  } catch (const json::exception& e) {
    throw InputError("robot model " + file.string() + ": " + e.what());
  }
  m.finalize();
  return m;
}

void save_robot_model(const RobotModel& m, const std::filesystem::path& file) {
  json j;
  j["name"] = m.name;
  for (int i = 0; i < 6; ++i) {
    j["joint_axes"].push_back(
        {m.joint_axes[i].x(), m.joint_axes[i].y(), m.joint_axes[i].z()});
    j["joint_origins_mm"].push_back({m.joint_origins[i].x(),
                                     m.joint_origins[i].y(),
                                     m.joint_origins[i].z()});
  }
  j["tool_translation_mm"] = {m.tool.p.x(), m.tool.p.y(), m.tool.p.z()};
  const Vec3 tb = rotation_to_beta(m.tool.R);
  j["tool_rotation_beta_rad"] = {tb.x(), tb.y(), tb.z()};
  auto put6 = [&j](const char* key, const Joints& v) {
    j[key] = {v[0], v[1], v[2], v[3], v[4], v[5]};
  };
  put6("q_min_rad", m.q_min);
  put6("q_max_rad", m.q_max);
  put6("dq_max_rad_s", m.dq_max);
  j["ddq_wrist_rad_s2"] = {m.ddq_wrist.x(), m.ddq_wrist.y(), m.ddq_wrist.z()};
  j["workspace_center_mm"] = {m.workspace_center.x(), m.workspace_center.y(),
                              m.workspace_center.z()};
  json at;
  at["q2_grid_rad"] = std::vector<double>(
      m.accel_table.q2_grid.data(),
      m.accel_table.q2_grid.data() + m.accel_table.q2_grid.size());
  at["q3_grid_rad"] = std::vector<double>(
      m.accel_table.q3_grid.data(),
      m.accel_table.q3_grid.data() + m.accel_table.q3_grid.size());
  const char* keys[3] = {"ddq1_rad_s2", "ddq2_rad_s2", "ddq3_rad_s2"};
  for (int k = 0; k < 3; ++k) {
    json rows = json::array();
    for (int i = 0; i < m.accel_table.q2_grid.size(); ++i) {
      json row = json::array();
      for (int jj = 0; jj < m.accel_table.q3_grid.size(); ++jj) {
        row.push_back(m.accel_table.limits[k](i, jj));
      }
      rows.push_back(row);
    }
    at[keys[k]] = rows;
  }
  j["accel_table"] = at;
  std::ofstream out(file);
  if (!out) throw InputError("cannot write robot model: " + file.string());
  out << j.dump(2) << '\n';
}

}  // namespace mpopt::kin
