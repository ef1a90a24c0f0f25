#include "sts/model_sim.hpp"

#include <cmath>
#include <random>

namespace sts {

namespace {

double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

struct Posture {
  double shank;
  double thigh;
  double back;
};

Posture sit_posture(const TrajectoryProfile& p) {
  return {p.sit_theta_s, kPi / 2.0, p.sit_theta_b};
}
Posture stand_posture(const TrajectoryProfile& p) {
  return {p.stand_theta_s, 0.0, p.stand_theta_b};
}

}  // namespace

PlanarMeasurement predict_measurement(const SegmentState& state,
                                      const SensorPlacement& placement, double g) {
  if (!state.finite()) throw InvalidInputError("predict_measurement: non-finite state");
  placement.validate();
  if (!(g > 0.0)) throw InvalidInputError("predict_measurement: g must be positive");
  const double l = placement.l;
  return PlanarMeasurement{
      g * std::sin(state.theta) - l * state.alpha,
      g * std::cos(state.theta) - l * state.omega * state.omega,
      state.omega,
  };
}

void TrajectoryProfile::validate() const {
  if (schedule.empty())
    throw InvalidInputError("trajectory profile: schedule must not be empty");
  if (noise_accel_sd < 0.0 || noise_gyro_sd < 0.0)
    throw InvalidInputError("trajectory profile: noise SDs must be >= 0");
  if (!(transition_speed_w > 0.0) || transition_speed_w > 1.0)
    throw InvalidInputError("trajectory profile: transition_speed_w must be in (0, 1]");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (!(schedule[i].second > 0.0))
      throw InvalidInputError("trajectory profile: durations must be positive");
    if (i > 0 && is_transition(schedule[i].first) == is_transition(schedule[i - 1].first))
      throw InvalidInputError(
          "trajectory profile: schedule must alternate stationary and transition spans");
  }
  // Transition direction must agree with the neighbouring stationary states.
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (!is_transition(schedule[i].first)) continue;
    const bool to_stand = schedule[i].first == StateLabel::SitToStand;
    const StateLabel from = to_stand ? StateLabel::Sit : StateLabel::Stand;
    const StateLabel to = to_stand ? StateLabel::Stand : StateLabel::Sit;
    if (i > 0 && schedule[i - 1].first != from)
      throw InvalidInputError("trajectory profile: " + to_string(schedule[i].first) +
                              " must follow " + to_string(from));
    if (i + 1 < schedule.size() && schedule[i + 1].first != to)
      throw InvalidInputError("trajectory profile: " + to_string(schedule[i].first) +
                              " must be followed by " + to_string(to));
  }
}

TrajectoryProfile make_cycle_profile(int cycles, double sit_dwell_s, double stand_dwell_s,
                                     double sit_to_stand_s, double stand_to_sit_s) {
  if (cycles < 1) throw InvalidInputError("cycle profile needs at least one cycle");
  TrajectoryProfile profile;
  for (int c = 0; c < cycles; ++c) {
    profile.schedule.emplace_back(StateLabel::Sit, sit_dwell_s);
    profile.schedule.emplace_back(StateLabel::SitToStand, sit_to_stand_s);
    profile.schedule.emplace_back(StateLabel::Stand, stand_dwell_s);
    profile.schedule.emplace_back(StateLabel::StandToSit, stand_to_sit_s);
  }
  profile.schedule.emplace_back(StateLabel::Sit, sit_dwell_s);
  return profile;
}

TrajectoryTruth simulate_segment_trajectory(const TrajectoryProfile& profile,
                                            double sample_rate_hz) {
  profile.validate();
  if (!(sample_rate_hz > 0.0))
    throw InvalidInputError("simulate: sample rate must be positive");

  const double fs = sample_rate_hz;
  const double w = profile.transition_speed_w;
  TrajectoryTruth out;
  out.sample_rate_hz = fs;

  const Posture sit = sit_posture(profile);
  const Posture stand = stand_posture(profile);

  std::size_t cursor = 0;
  for (const auto& [label, duration] : profile.schedule) {
    const auto n = static_cast<std::size_t>(std::llround(duration * fs));
    if (n < 1) throw InvalidInputError("simulate: span shorter than one sample");
    if (is_transition(label) && n < 2)
      throw InvalidInputError("simulate: transition span needs at least two samples");

    if (is_stationary(label)) {
      const Posture& pose = (label == StateLabel::Sit) ? sit : stand;
      for (std::size_t k = 0; k < n; ++k) {
        out.shank.push_back({pose.shank, 0.0, 0.0});
        out.thigh.push_back({pose.thigh, 0.0, 0.0});
        out.back.push_back({pose.back, 0.0, 0.0});
        out.labels.push_back(label);
      }
    } else {
      // Edge-anchored logistic: the angle meets the posture values exactly at
      // the first and last sample of the span.
      const Posture& from = (label == StateLabel::SitToStand) ? sit : stand;
      const Posture& to = (label == StateLabel::SitToStand) ? stand : sit;
      const double b = static_cast<double>(n - 1) / 2.0;
      const double l0 = logistic(w * (0.0 - b));
      const double l1 = logistic(w * (static_cast<double>(n - 1) - b));
      const double denom = l1 - l0;
      for (std::size_t k = 0; k < n; ++k) {
        const double l = logistic(w * (static_cast<double>(k) - b));
        const double frac = (l - l0) / denom;                        // 0 -> 1
        const double dfrac = w * l * (1.0 - l) / denom * fs;         // 1/s
        const double d2frac = w * w * l * (1.0 - l) * (1.0 - 2.0 * l) / denom * fs * fs;
        const auto state_for = [&](double a_from, double a_to) {
          const double amp = a_to - a_from;
          return SegmentState{a_from + amp * frac, amp * dfrac, amp * d2frac};
        };
        out.shank.push_back(state_for(from.shank, to.shank));
        out.thigh.push_back(state_for(from.thigh, to.thigh));
        out.back.push_back(state_for(from.back, to.back));
        out.labels.push_back(label);
      }
    }
    out.segments.push_back(make_segment(cursor, cursor + n, label, fs));
    cursor += n;
  }
  return out;
}

TrialRecording synthesize_imu(const TrajectoryTruth& truth,
                              const SensorPlacement& shank_placement,
                              const SensorPlacement& back_placement,
                              double noise_accel_sd, double noise_gyro_sd,
                              std::uint64_t seed, double g) {
  if (truth.shank.size() != truth.back.size())
    throw InvalidInputError("synthesize_imu: truth sequence length mismatch");
  if (truth.shank.empty()) throw InvalidInputError("synthesize_imu: empty truth");
  if (noise_accel_sd < 0.0 || noise_gyro_sd < 0.0)
    throw InvalidInputError("synthesize_imu: noise SDs must be >= 0");
  shank_placement.validate();
  back_placement.validate();

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> unit;
  const auto gauss = [&](double sd) { return sd > 0.0 ? sd * unit(rng) : 0.0; };

  const double dt = 1.0 / truth.sample_rate_hz;
  TrialRecording rec;
  rec.placement_shank = shank_placement;
  rec.placement_back = back_placement;
  rec.sample_rate_hz = truth.sample_rate_hz;

  const auto fill = [&](const std::vector<SegmentState>& states,
                        const SensorPlacement& placement, std::vector<ImuSample>& out) {
    out.reserve(states.size());
    for (std::size_t k = 0; k < states.size(); ++k) {
      const PlanarMeasurement m = predict_measurement(states[k], placement, g);
      ImuSample s;
      s.t = static_cast<double>(k) * dt;
      s.accel = {m.a_x + gauss(noise_accel_sd), m.a_y + gauss(noise_accel_sd),
                 gauss(noise_accel_sd)};
      s.gyro = {gauss(noise_gyro_sd), gauss(noise_gyro_sd),
                m.gyr_z + gauss(noise_gyro_sd)};
      out.push_back(s);
    }
  };
  fill(truth.shank, shank_placement, rec.shank_stream);
  fill(truth.back, back_placement, rec.back_stream);
  return rec;
}

SyntheticTrial make_synthetic_trial(const TrajectoryProfile& profile,
                                    const SensorPlacement& shank_placement,
                                    const SensorPlacement& back_placement,
                                    std::uint64_t seed, double sample_rate_hz, double g) {
  SyntheticTrial trial;
  trial.truth = simulate_segment_trajectory(profile, sample_rate_hz);
  trial.recording = synthesize_imu(trial.truth, shank_placement, back_placement,
                                   profile.noise_accel_sd, profile.noise_gyro_sd, seed, g);
  return trial;
}

}  // namespace sts
