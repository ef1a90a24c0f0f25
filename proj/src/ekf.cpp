#include "sts/ekf.hpp"

#include <cmath>

namespace sts {

namespace {

Eigen::Matrix3d transition_matrix(double dt) {
  Eigen::Matrix3d f;
  f << 1.0, dt, dt * dt / 2.0,  //
      0.0, 1.0, dt,             //
      0.0, 0.0, 1.0;
  return f;
}

Eigen::Vector3d to_vec(const SegmentState& s) { return {s.theta, s.omega, s.alpha}; }
SegmentState to_state(const Eigen::Vector3d& v) { return {v(0), v(1), v(2)}; }

void check_finite(const EkfState& s, const char* where) {
  if (!s.x.finite() || !s.p.allFinite())
    throw InvalidInputError(std::string(where) + ": non-finite filter state");
}

}  // namespace

Eigen::Matrix3d EkfConfig::default_q(double dt) {
  Eigen::Vector3d d{(dt * dt) * (dt * dt), (0.1 * dt) * (0.1 * dt), 0.04 * 0.04};
  return d.asDiagonal();
}

Eigen::Matrix3d EkfConfig::default_r(double g) {
  Eigen::Vector3d d{(g / 10.0) * (g / 10.0), (g / 10.0) * (g / 10.0), 0.005 * 0.005};
  return d.asDiagonal();
}

EkfConfig EkfConfig::defaults(double l, double dt, double g) {
  EkfConfig c;
  c.dt = dt;
  c.g = g;
  c.l = l;
  c.q = default_q(dt);
  c.r = default_r(g);
  c.validate();
  return c;
}

void EkfConfig::validate() const {
  if (!(dt > 0.0)) throw ConfigError("ekf: dt must be positive");
  if (!(g > 0.0)) throw ConfigError("ekf: g must be positive");
  if (!(l > 0.0) || !(l < 1.5)) throw ConfigError("ekf: sensor distance out of range");
  if (init_window < 1) throw ConfigError("ekf: init window must be >= 1");
  const auto sym_psd = [](const Eigen::Matrix3d& m) {
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-9) return false;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m);
    return es.eigenvalues().minCoeff() >= -1e-12;
  };
  if (!sym_psd(q)) throw ConfigError("ekf: Q must be symmetric positive semi-definite");
  if (!sym_psd(r)) throw ConfigError("ekf: R must be symmetric positive semi-definite");
}

EkfState ekf_predict(const EkfState& state, const EkfConfig& config) {
  check_finite(state, "ekf_predict");
  const Eigen::Matrix3d f = transition_matrix(config.dt);
  EkfState next;
  next.x = to_state(f * to_vec(state.x));
  next.p = f * state.p * f.transpose() + config.q;
  next.p = 0.5 * (next.p + next.p.transpose());
  return next;
}

Eigen::Matrix3d measurement_jacobian(const SegmentState& state, const EkfConfig& config) {
  const double g = config.g;
  const double l = config.l;
  Eigen::Matrix3d j;
  j << g * std::cos(state.theta), 0.0, -l,                        //
      -g * std::sin(state.theta), -2.0 * l * state.omega, 0.0,    //
      0.0, 1.0, 0.0;
  return j;
}

EkfState ekf_update(const EkfState& state, const PlanarMeasurement& z,
                    const EkfConfig& config) {
  check_finite(state, "ekf_update");
  if (!std::isfinite(z.a_x) || !std::isfinite(z.a_y) || !std::isfinite(z.gyr_z))
    throw InvalidInputError("ekf_update: non-finite measurement");

  const SensorPlacement placement{config.l, SegmentId::Shank};
  const PlanarMeasurement h = predict_measurement(state.x, placement, config.g);
  const Eigen::Vector3d innovation{z.a_x - h.a_x, z.a_y - h.a_y, z.gyr_z - h.gyr_z};

  const Eigen::Matrix3d j = measurement_jacobian(state.x, config);
  const Eigen::Matrix3d s = j * state.p * j.transpose() + config.r;

  Eigen::LDLT<Eigen::Matrix3d> ldlt(s);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive())
    throw NumericalError("ekf_update: innovation covariance is not positive definite");

  // K = P J^T S^-1, via the stable solve S K^T = J P.
  const Eigen::Matrix3d k = ldlt.solve(j * state.p).transpose();

  EkfState next;
  next.x = to_state(to_vec(state.x) + k * innovation);
  const Eigen::Matrix3d ikj = Eigen::Matrix3d::Identity() - k * j;
  next.p = ikj * state.p * ikj.transpose() + k * config.r * k.transpose();
  next.p = 0.5 * (next.p + next.p.transpose());
  return next;
}

EkfState ekf_init(std::span<const PlanarMeasurement> stream, const EkfConfig& config) {
  if (stream.empty()) throw InvalidInputError("ekf_init: empty stream");
  const std::size_t n = std::min<std::size_t>(config.init_window, stream.size());
  double ax = 0.0, ay = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ax += stream[i].a_x;
    ay += stream[i].a_y;
  }
  EkfState s;
  s.x.theta = std::atan2(ax / n, ay / n);
  s.x.omega = stream.front().gyr_z;
  s.x.alpha = 0.0;
  s.p = Eigen::Vector3d{0.1, 0.1, 0.1}.asDiagonal();
  return s;
}

std::vector<SegmentState> run_ekf(std::span<const PlanarMeasurement> stream,
                                  const EkfConfig& config) {
  if (stream.empty()) throw InvalidInputError("run_ekf: empty stream");
  config.validate();
  EkfState state = ekf_init(stream, config);
  std::vector<SegmentState> out;
  out.reserve(stream.size());
  for (const PlanarMeasurement& z : stream) {
    state = ekf_predict(state, config);
    state = ekf_update(state, z, config);
    out.push_back(state.x);
  }
  return out;
}

std::vector<PlanarMeasurement> planar_channels(const std::vector<ImuSample>& stream) {
  std::vector<PlanarMeasurement> out;
  out.reserve(stream.size());
  for (const ImuSample& s : stream) out.push_back({s.accel[0], s.accel[1], s.gyro[2]});
  return out;
}

}  // namespace sts
