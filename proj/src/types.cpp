#include "sts/types.hpp"

namespace sts {

std::string to_string(StateLabel s) {
  switch (s) {
    case StateLabel::Sit: return "Sit";
    case StateLabel::Stand: return "Stand";
    case StateLabel::SitToStand: return "SitToStand";
    case StateLabel::StandToSit: return "StandToSit";
  }
  return "?";
}

StateLabel parse_state_label(const std::string& text) {
  if (text == "Sit") return StateLabel::Sit;
  if (text == "Stand") return StateLabel::Stand;
  if (text == "SitToStand") return StateLabel::SitToStand;
  if (text == "StandToSit") return StateLabel::StandToSit;
  throw ParseError("unknown state label '" + text + "'");
}

bool theta_in_report_range(double theta, char segment) {
  switch (segment) {
    case 'S':
    case 'T':
      return theta >= 0.0 && theta < kPi / 2.0;
    case 'B':
      return theta >= -kPi / 2.0 && theta < kPi / 2.0;
    default:
      throw InvalidInputError("segment must be one of 'S','T','B'");
  }
}

std::vector<double> thetas(const std::vector<SegmentState>& s) {
  std::vector<double> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i].theta;
  return out;
}

std::vector<double> omegas(const std::vector<SegmentState>& s) {
  std::vector<double> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i].omega;
  return out;
}

std::vector<double> alphas(const std::vector<SegmentState>& s) {
  std::vector<double> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i].alpha;
  return out;
}

}  // namespace sts
