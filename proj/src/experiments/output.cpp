#include <array>
#include <charconv>
#include <ostream>

#include "cascadia/experiments.hpp"

namespace cascadia {

std::string format_double(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  (void)ec;
  return std::string(buf.data(), ptr);
}

void write_trials_csv(std::ostream& out, std::span<const TrialRecord> records,
                      PlayerLabel label) {
  out << "size,trial,player,influenced,timesteps,terminated_by\n";
  for (const auto& r : records) {
    out << r.size << ',' << r.trial << ','
        << (label ? label(r.player) : std::to_string(r.player)) << ',' << r.influenced << ','
        << r.timesteps << ',' << to_string(r.terminated_by) << '\n';
  }
}

void write_means_csv(std::ostream& out, std::span<const SweepMean> means, PlayerLabel label) {
  out << "size,player,mean_influenced\n";
  for (const auto& m : means) {
    out << m.size << ',' << (label ? label(m.player) : std::to_string(m.player)) << ','
        << format_double(m.mean_influenced) << '\n';
  }
}

}  // namespace cascadia
